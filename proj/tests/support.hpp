#pragma once

// Test-only helpers: a brute-force oracle that shares no code with the exact
// solver, and small graph builders.

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <tuple>
#include <vector>

#include "phc/graph.hpp"

namespace phc::testing {

/// Can the edges along `seq` (closed into a cycle if `closed`) be colored so
/// neighbors differ? Tries every first color, then tracks feasible colors.
inline bool colorable(const ColoredMultigraph& g, const std::vector<Vertex>& seq,
                      bool closed) {
  const std::size_t len = seq.size();
  const std::size_t edges = closed ? len : len - 1;
  std::vector<ColorSet> avail(edges);
  for (std::size_t i = 0; i < edges; ++i) {
    avail[i] = g.colors_between(seq[i], seq[(i + 1) % len]);
    if (avail[i] == 0) return false;
  }
  for (Color first = 1; first <= g.color_count(); ++first) {
    if (!((avail[0] >> first) & 1U)) continue;
    ColorSet reach = bit(first);
    for (std::size_t i = 1; i < edges; ++i) {
      ColorSet next = 0;
      for (Color k = 1; k <= g.color_count(); ++k) {
        if (((avail[i] >> k) & 1U) && (reach & ~bit(k))) next |= bit(k);
      }
      reach = next;
    }
    if (!closed && reach) return true;
    if (closed && (reach & ~bit(first))) return true;
  }
  return false;
}

/// Brute force over vertex subsets and orderings.
inline bool naive_has_proper_cycle(const ColoredMultigraph& g, int length) {
  const int n = g.vertex_count();
  if (length < 3 || length > n) return false;
  for (VertexSet s = 0; s < bit(n); ++s) {
    if (count(s) != length) continue;
    std::vector<Vertex> seq;
    for (Vertex v = 0; v < n; ++v) {
      if ((s >> v) & 1U) seq.push_back(v);
    }
    // Fix the smallest vertex first; permute the rest.
    do {
      if (colorable(g, seq, true)) return true;
    } while (std::next_permutation(seq.begin() + 1, seq.end()));
  }
  return false;
}

inline bool naive_has_proper_ham_path(const ColoredMultigraph& g) {
  std::vector<Vertex> seq(static_cast<std::size_t>(g.vertex_count()));
  std::iota(seq.begin(), seq.end(), 0);
  do {
    if (colorable(g, seq, false)) return true;
  } while (std::next_permutation(seq.begin(), seq.end()));
  return false;
}

/// Every pair joined in every color, minus `removed` (u < v).
inline ColoredMultigraph complete_minus(
    int n, int c, const std::set<std::tuple<int, int, int>>& removed) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      for (Color k = 1; k <= c; ++k) {
        if (!removed.contains({u, v, k})) edges.push_back(Edge{u, v, k});
      }
    }
  }
  return ColoredMultigraph(n, c, edges);
}

/// Color k gets exactly the pairs in layers[k - 1].
inline ColoredMultigraph from_layers(
    int n, const std::vector<std::set<std::pair<int, int>>>& layers) {
  std::vector<Edge> edges;
  for (std::size_t k = 0; k < layers.size(); ++k) {
    for (const auto& [u, v] : layers[k]) {
      edges.push_back(Edge{u, v, static_cast<Color>(k + 1)});
    }
  }
  return ColoredMultigraph(n, static_cast<int>(layers.size()), edges);
}

inline std::set<std::pair<int, int>> clique(int first, int last) {
  std::set<std::pair<int, int>> out;
  for (int u = first; u <= last; ++u) {
    for (int v = u + 1; v <= last; ++v) out.emplace(u, v);
  }
  return out;
}

// Hand-built instances that steer the constructive solvers into branches a
// random corpus rarely reaches. Each one meets its theorem's hypotheses.

/// Two colors, n = 11. Vertex 0 keeps five red edges, and one more vertex is
/// thinned so the first contraction loses a color at the given place:
/// 'a' (the new vertex loses red), 'b' (it loses blue), 'c' (another vertex
/// loses blue), 'd' like 'c' with vertex 0 down to two red edges.
inline ColoredMultigraph rd_drop_instance(char which) {
  std::set<std::tuple<int, int, int>> cut;
  auto drop = [&](int u, int v, int k) {
    cut.insert({std::min(u, v), std::max(u, v), k});
  };
  const int n = 11;
  const int keep_red = which == 'd' ? 2 : 5;
  for (int x = keep_red + 1; x < n; ++x) drop(0, x, 1);
  if (which == 'a') {
    for (int x = 3; x < n; ++x) drop(2, x, 1);
  } else if (which == 'b') {
    for (int x = 3; x < n; ++x) drop(1, x, 2);
  } else {
    for (int x = 3; x < n - 1; ++x) drop(n - 1, x, 2);
    drop(n - 1, 1, 2);
  }
  return complete_minus(n, 2, cut);
}

/// Four colors, n = 6, no admissible merge, colors 1 and 2 share K5 plus a
/// pendant edge: the intersection graph has a cut vertex.
inline ColoredMultigraph separable_intersection_instance() {
  auto base = clique(0, 4);
  base.emplace(0, 5);
  auto more = base;
  more.emplace(1, 5);
  return from_layers(6, {base, base, more, more});
}

/// Four colors, n = 6, no admissible merge, 2-connected intersection graph.
inline ColoredMultigraph even_intersection_instance() {
  auto t = clique(0, 5);
  t.erase({0, 1});
  t.erase({2, 3});
  t.erase({4, 5});
  auto s = t;
  s.erase({0, 2});
  return from_layers(6, {t, t, s, s});
}

/// Four colors, n = 7, all colors on the same 17-edge 2-connected graph.
inline ColoredMultigraph odd_intersection_instance() {
  std::set<std::pair<int, int>> x;
  for (int i = 0; i < 7; ++i) {
    const int j = (i + 1) % 7;
    x.emplace(std::min(i, j), std::max(i, j));
  }
  for (const auto& p : clique(0, 6)) {
    if (x.size() == 17) break;
    x.insert(p);
  }
  return from_layers(7, {x, x, x, x});
}

/// Four colors, n = 5, 29 edges: meets the edge-count hypotheses while the
/// intersection of colors 1 and 2 is K2 joined to three independent vertices,
/// 2-connected yet not Hamiltonian.
inline ColoredMultigraph small_intersection_gap_instance() {
  auto s = clique(0, 4);
  s.erase({0, 1});
  s.erase({0, 2});
  s.erase({1, 2});
  auto first = s;
  first.emplace(0, 1);
  return from_layers(5, {first, s, s, s});
}

/// Three colors, n = 6: vertex 0 has a single color-1 edge (to 1) and the
/// degree-one lemma has to build the cycle without a contraction.
inline ColoredMultigraph degree_one_direct_instance() {
  return ColoredMultigraph(
      6, 3,
      std::vector<Edge>{
          {0, 1, 1}, {0, 1, 2}, {0, 1, 3}, {0, 2, 2}, {0, 2, 3}, {0, 3, 2},
          {0, 3, 3}, {0, 4, 2}, {0, 4, 3}, {0, 5, 2}, {0, 5, 3}, {1, 2, 1},
          {1, 2, 2}, {1, 2, 3}, {1, 3, 1}, {1, 3, 2}, {1, 3, 3}, {1, 4, 1},
          {1, 4, 2}, {1, 4, 3}, {1, 5, 1}, {1, 5, 2}, {1, 5, 3}, {2, 3, 2},
          {2, 3, 3}, {2, 4, 1}, {2, 5, 1}, {2, 5, 2}, {2, 5, 3}, {3, 4, 2},
          {3, 4, 3}, {3, 5, 3}, {4, 5, 2}, {4, 5, 3}});
}

}  // namespace phc::testing
