#include "phc/graph.hpp"

#include <algorithm>
#include <string>

#include "phc/errors.hpp"

namespace phc {

namespace {

void check_shape(int n, int c) {
  if (n < 0 || n > kMaxVertices) {
    throw InputError("vertex count " + std::to_string(n) +
                     " outside 0.." + std::to_string(kMaxVertices));
  }
  if (c < 1 || c > kMaxColors) {
    throw InputError("color count " + std::to_string(c) + " outside 1.." +
                     std::to_string(kMaxColors));
  }
}

}  // namespace

ColoredMultigraph::ColoredMultigraph(int n, int c, std::span<const Edge> edges)
    : n_(n), c_(c) {
  check_shape(n, c);
  adj_.assign(static_cast<std::size_t>(n) * c, 0);
  any_.assign(n, 0);
  for (const Edge& e : edges) {
    if (!has_vertex(e.u) || !has_vertex(e.v)) {
      throw InputError("edge endpoint out of range: " + std::to_string(e.u) +
                       "-" + std::to_string(e.v));
    }
    if (e.u == e.v) {
      throw InputError("loop at vertex " + std::to_string(e.u));
    }
    if (!has_color(e.color)) {
      throw InputError("edge color " + std::to_string(e.color) +
                       " outside 1.." + std::to_string(c));
    }
    VertexSet& row = adj_[static_cast<std::size_t>(e.color - 1) * n + e.u];
    if ((row >> e.v) & 1U) {
      throw InputError("duplicate edge " + std::to_string(e.u) + "-" +
                       std::to_string(e.v) + " in color " +
                       std::to_string(e.color));
    }
    row |= bit(e.v);
    adj_[static_cast<std::size_t>(e.color - 1) * n + e.v] |= bit(e.u);
    any_[e.u] |= bit(e.v);
    any_[e.v] |= bit(e.u);
    ++m_;
  }
}

ColoredMultigraph ColoredMultigraph::from_adjacency(
    int n, int c, std::vector<VertexSet> adjacency) {
  check_shape(n, c);
  ColoredMultigraph g;
  g.n_ = n;
  g.c_ = c;
  g.adj_ = std::move(adjacency);
  g.any_.assign(n, 0);
  std::size_t half_edges = 0;
  for (int k = 0; k < c; ++k) {
    for (int x = 0; x < n; ++x) {
      VertexSet row = g.adj_[static_cast<std::size_t>(k) * n + x];
      g.any_[x] |= row;
      half_edges += count(row);
    }
  }
  g.m_ = half_edges / 2;
  return g;
}

ColorSet ColoredMultigraph::colors_between(Vertex u, Vertex v) const {
  ColorSet out = 0;
  for (Color k = 1; k <= c_; ++k) {
    if (has_edge(u, v, k)) out |= ColorSet{1} << k;
  }
  return out;
}

int ColoredMultigraph::degree(Vertex x) const {
  int d = 0;
  for (Color k = 1; k <= c_; ++k) d += count(neighbors(x, k));
  return d;
}

std::vector<Edge> ColoredMultigraph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (Vertex u = 0; u < n_; ++u) {
    for_each_bit(any_[u] & above(u), [&](int v) {
      for (Color k = 1; k <= c_; ++k) {
        if (has_edge(u, v, k)) out.push_back({u, v, k});
      }
    });
  }
  return out;
}

int colored_degree(const ColoredMultigraph& g, Vertex x, Color i) {
  if (!g.has_vertex(x)) throw InputError("vertex out of range");
  if (!g.has_color(i)) throw InputError("color out of range");
  return count(g.neighbors(x, i));
}

int rainbow_degree(const ColoredMultigraph& g, Vertex x) {
  if (!g.has_vertex(x)) throw InputError("vertex out of range");
  int rd = 0;
  for (Color k = 1; k <= g.color_count(); ++k) {
    if (g.neighbors(x, k) != 0) ++rd;
  }
  return rd;
}

int graph_rainbow_degree(const ColoredMultigraph& g) {
  if (g.vertex_count() == 0) {
    throw InputError("rainbow degree of an empty graph");
  }
  int best = g.color_count();
  for (Vertex x = 0; x < g.vertex_count(); ++x) {
    best = std::min(best, rainbow_degree(g, x));
  }
  return best;
}

VertexSet reachable(const ColoredMultigraph& g, Vertex from, VertexSet within) {
  VertexSet seen = bit(from);
  VertexSet frontier = seen;
  while (frontier != 0) {
    VertexSet next = 0;
    for_each_bit(frontier, [&](int x) { next |= g.neighbors(x); });
    frontier = next & within & ~seen;
    seen |= frontier;
  }
  return seen;
}

bool is_connected(const ColoredMultigraph& g) {
  if (g.vertex_count() <= 1) return true;
  return reachable(g, 0, g.all_vertices()) == g.all_vertices();
}

bool is_2connected(const ColoredMultigraph& g) {
  const int n = g.vertex_count();
  if (n < 3 || !is_connected(g)) return false;
  // n <= 64, so removing each vertex in turn is cheap enough.
  for (Vertex cut = 0; cut < n; ++cut) {
    VertexSet rest = g.all_vertices() & ~bit(cut);
    if (reachable(g, lowest(rest), rest) != rest) return false;
  }
  return true;
}

}  // namespace phc
