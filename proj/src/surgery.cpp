#include "phc/surgery.hpp"

#include <string>

#include "phc/errors.hpp"

namespace phc {

namespace {

std::size_t slot(int n, Color k, Vertex x) {
  return static_cast<std::size_t>(k - 1) * n + x;
}

// Rewrites a mask of old vertex ids through `to_new` (-1 = dropped).
VertexSet remap(VertexSet s, const std::vector<Vertex>& to_new) {
  VertexSet out = 0;
  for_each_bit(s, [&](int x) {
    if (to_new[x] >= 0) out |= bit(to_new[x]);
  });
  return out;
}

}  // namespace

ColoredMultigraph complement(const ColoredMultigraph& g) {
  const int n = g.vertex_count();
  std::vector<VertexSet> adj(static_cast<std::size_t>(n) * g.color_count());
  for (Color k = 1; k <= g.color_count(); ++k) {
    for (Vertex x = 0; x < n; ++x) {
      adj[slot(n, k, x)] = g.all_vertices() & ~bit(x) & ~g.neighbors(x, k);
    }
  }
  return ColoredMultigraph::from_adjacency(n, g.color_count(), std::move(adj));
}

ColoredMultigraph color_subgraph(const ColoredMultigraph& g, Color i) {
  if (!g.has_color(i)) throw InputError("color out of range");
  const int n = g.vertex_count();
  std::vector<VertexSet> adj(n);
  for (Vertex x = 0; x < n; ++x) adj[x] = g.neighbors(x, i);
  return ColoredMultigraph::from_adjacency(n, 1, std::move(adj));
}

ColoredMultigraph parallel_intersection(const ColoredMultigraph& g, Color j,
                                        Color l) {
  if (!g.has_color(j) || !g.has_color(l)) {
    throw InputError("color out of range");
  }
  const int n = g.vertex_count();
  std::vector<VertexSet> adj(n);
  for (Vertex x = 0; x < n; ++x) adj[x] = g.neighbors(x, j) & g.neighbors(x, l);
  return ColoredMultigraph::from_adjacency(n, 1, std::move(adj));
}

InducedSubgraph induced_subgraph(const ColoredMultigraph& g, VertexSet keep) {
  keep &= g.all_vertices();
  InducedSubgraph out;
  std::vector<Vertex> to_new(g.vertex_count(), -1);
  for_each_bit(keep, [&](int x) {
    to_new[x] = static_cast<Vertex>(out.original.size());
    out.original.push_back(x);
  });
  const int n = static_cast<int>(out.original.size());
  std::vector<VertexSet> adj(static_cast<std::size_t>(n) * g.color_count());
  for (Color k = 1; k <= g.color_count(); ++k) {
    for (Vertex y = 0; y < n; ++y) {
      adj[slot(n, k, y)] = remap(g.neighbors(out.original[y], k) & keep, to_new);
    }
  }
  out.graph =
      ColoredMultigraph::from_adjacency(n, g.color_count(), std::move(adj));
  return out;
}

CycleCertificate to_original(const InducedSubgraph& sub,
                             const CycleCertificate& cert) {
  CycleCertificate out{{}, cert.colors};
  for (Vertex x : cert.vertices) out.vertices.push_back(sub.original.at(x));
  return out;
}

PathCertificate to_original(const InducedSubgraph& sub,
                            const PathCertificate& cert) {
  PathCertificate out{{}, cert.colors};
  for (Vertex x : cert.vertices) out.vertices.push_back(sub.original.at(x));
  return out;
}

std::pair<ColoredMultigraph, MergeRecord> merge_colors(
    const ColoredMultigraph& g, Color j, Color t) {
  const int c = g.color_count();
  if (c < 3) throw InputError("merging colors needs at least three colors");
  if (!g.has_color(j) || !g.has_color(t)) {
    throw InputError("merge color out of range");
  }
  if (j == t) throw InputError("cannot merge a color into itself");

  MergeRecord rec;
  rec.merged_color = j;
  rec.target_color = t;
  rec.renumber.assign(c + 1, 0);
  for (Color k = 1; k <= c; ++k) {
    if (k != j) rec.renumber[k] = k > j ? k - 1 : k;
  }
  rec.renumber[j] = rec.renumber[t];

  const int n = g.vertex_count();
  std::vector<VertexSet> adj(static_cast<std::size_t>(n) * (c - 1), 0);
  for (Color k = 1; k <= c; ++k) {
    for (Vertex x = 0; x < n; ++x) {
      adj[slot(n, rec.renumber[k], x)] |= g.neighbors(x, k);
    }
  }
  for (Vertex u = 0; u < n; ++u) {
    for_each_bit(g.neighbors(u, j) & g.neighbors(u, t) & above(u),
                 [&](int v) { rec.dropped_duplicates.emplace_back(u, v); });
  }
  return {ColoredMultigraph::from_adjacency(n, c - 1, std::move(adj)),
          std::move(rec)};
}

ContractionRule ContractionRule::uniform(int c, Inherit how) {
  return ContractionRule{std::vector<Inherit>(c, how)};
}

Contraction contract(const ColoredMultigraph& g, Vertex center, Vertex a,
                     Vertex b, const ContractionRule& rule) {
  if (!g.has_vertex(center) || !g.has_vertex(a) || !g.has_vertex(b)) {
    throw InputError("contraction vertex out of range");
  }
  if (a == b || center == b) {
    throw InputError("contracted vertices must be distinct");
  }
  if (static_cast<int>(rule.by_color.size()) != g.color_count()) {
    throw InputError("contraction rule must cover colors 1.." +
                     std::to_string(g.color_count()));
  }

  Contraction ct;
  ct.center = center;
  ct.a = a;
  ct.b = b;
  ct.rule = rule;

  const VertexSet removed = bit(center) | bit(a) | bit(b);
  const VertexSet rest = g.all_vertices() & ~removed;
  std::vector<Vertex> to_new(g.vertex_count(), -1);
  for_each_bit(rest, [&](int x) {
    to_new[x] = static_cast<Vertex>(ct.original.size());
    ct.original.push_back(x);
  });
  ct.merged = static_cast<Vertex>(ct.original.size());
  ct.original.push_back(-1);

  const int n = static_cast<int>(ct.original.size());
  const int c = g.color_count();
  std::vector<VertexSet> adj(static_cast<std::size_t>(n) * c, 0);
  for (Color k = 1; k <= c; ++k) {
    for (Vertex y = 0; y < ct.merged; ++y) {
      adj[slot(n, k, y)] = remap(g.neighbors(ct.original[y], k) & rest, to_new);
    }
    VertexSet inherited = 0;
    switch (rule(k)) {
      case Inherit::none: break;
      case Inherit::from_a: inherited = g.neighbors(a, k); break;
      case Inherit::from_b: inherited = g.neighbors(b, k); break;
      case Inherit::intersection:
        inherited = g.neighbors(a, k) & g.neighbors(b, k);
        break;
    }
    VertexSet mapped = remap(inherited & rest, to_new);
    adj[slot(n, k, ct.merged)] = mapped;
    for_each_bit(mapped, [&](int y) { adj[slot(n, k, y)] |= bit(ct.merged); });
  }
  ct.graph = ColoredMultigraph::from_adjacency(n, c, std::move(adj));
  ct.removed_edges = g.edge_count() - ct.graph.edge_count();
  return ct;
}

namespace {

// Chooses colors for the edges prev -> seq[0] -> ... -> seq.back() -> next so
// that the walk stays proper between the fixed colors `before` and `after`.
bool choose_colors(const ColoredMultigraph& g, const std::vector<Vertex>& walk,
                   Color before, Color after, std::vector<Color>& chosen) {
  const std::size_t edges = walk.size() - 1;
  if (chosen.size() == edges) return chosen.back() != after;
  const std::size_t i = chosen.size();
  const Color previous = i == 0 ? before : chosen.back();
  ColorSet options = g.colors_between(walk[i], walk[i + 1]);
  for (Color k = 1; k <= g.color_count(); ++k) {
    if (!((options >> k) & 1U) || k == previous) continue;
    chosen.push_back(k);
    if (choose_colors(g, walk, before, after, chosen)) return true;
    chosen.pop_back();
  }
  return false;
}

}  // namespace

std::optional<CycleCertificate> lift_through(const Contraction& ct,
                                             const ColoredMultigraph& original,
                                             const CycleCertificate& cert) {
  const std::size_t len = cert.length();
  std::size_t at = len;
  for (std::size_t i = 0; i < len; ++i) {
    if (cert.vertices[i] == ct.merged) at = i;
  }
  if (at == len) {
    CycleCertificate out{{}, cert.colors};
    for (Vertex x : cert.vertices) out.vertices.push_back(ct.original.at(x));
    return out;
  }

  // Rotate so the merged vertex comes first: M, q, ..., p.
  std::vector<Vertex> ring;
  std::vector<Color> ring_colors;
  for (std::size_t s = 0; s < len; ++s) {
    ring.push_back(ct.original.at(cert.vertices[(at + s) % len]));
    ring_colors.push_back(cert.colors[(at + s) % len]);
  }
  const Vertex q = ring[1];
  const Vertex p = ring[len - 1];
  const Color after = ring_colors[1];         // q's other cycle edge
  const Color before = ring_colors[len - 2];  // p's other cycle edge

  std::vector<std::vector<Vertex>> orders;
  if (ct.is_pair()) {
    orders = {{ct.a, ct.b}, {ct.b, ct.a}};
  } else {
    orders = {{ct.a, ct.center, ct.b}, {ct.b, ct.center, ct.a}};
  }
  for (const auto& inner : orders) {
    std::vector<Vertex> walk{p};
    walk.insert(walk.end(), inner.begin(), inner.end());
    walk.push_back(q);
    std::vector<Color> chosen;
    if (!choose_colors(original, walk, before, after, chosen)) continue;

    CycleCertificate out;
    out.vertices = inner;
    out.colors.assign(chosen.begin() + 1, chosen.end());  // inner .. q
    for (std::size_t s = 1; s < len; ++s) out.vertices.push_back(ring[s]);
    for (std::size_t s = 1; s + 1 < len; ++s) {
      out.colors.push_back(ring_colors[s]);
    }
    out.colors.push_back(chosen.front());  // p -> first inner vertex
    if (verify_proper_cycle(original, out)) return out;
  }
  return std::nullopt;
}

}  // namespace phc
