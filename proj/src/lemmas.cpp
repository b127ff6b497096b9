#include <string>

#include "constructive_detail.hpp"
#include "phc/errors.hpp"

namespace phc {

InsertionResult lemma_cycle_insertion(const ColoredMultigraph& g,
                                      const CycleCertificate& cycle, Vertex x,
                                      Vertex y, Color xy_color) {
  if (g.color_count() != 2) {
    throw InputError("cycle insertion needs a two-colored graph");
  }
  if (Verdict v = verify_proper_cycle(g, cycle); !v) {
    throw InputError("cycle insertion: " + v.reason());
  }
  const int n = g.vertex_count();
  if (static_cast<int>(cycle.length()) > n - 2) {
    throw InputError("cycle insertion: cycle must leave two vertices out");
  }
  if (!g.has_vertex(x) || !g.has_vertex(y) || x == y) {
    throw InputError("cycle insertion: x and y must be distinct vertices");
  }
  VertexSet on_cycle = 0;
  for (Vertex v : cycle.vertices) on_cycle |= bit(v);
  if (((on_cycle >> x) & 1U) || ((on_cycle >> y) & 1U)) {
    throw InputError("cycle insertion: x and y must be off the cycle");
  }
  if (!g.has_color(xy_color) || !g.has_edge(x, y, xy_color)) {
    throw InputError("cycle insertion: xy is not an edge of the given color");
  }

  const Color other = 3 - xy_color;
  InsertionResult r;
  r.cycle_length = static_cast<int>(cycle.length());
  r.attach_degree_sum = count(g.neighbors(x, other) & on_cycle) +
                        count(g.neighbors(y, other) & on_cycle);
  if (r.attach_degree_sum <= r.cycle_length) return r;
  r.cycle = detail::splice_edge(g, cycle, x, y, xy_color);
  if (!r.cycle) {
    throw InternalError("cycle insertion: degree sum " +
                        std::to_string(r.attach_degree_sum) +
                        " exceeds the cycle length but no edge admits a splice");
  }
  return r;
}

std::pair<ColoredMultigraph, MergeRecord> reduce_color_count(
    const ColoredMultigraph& g, long long ell) {
  const int c = g.color_count();
  const auto m = static_cast<long long>(g.edge_count());
  if (c < 4) throw InputError("color reduction needs at least four colors");
  if (m < c * ell + 1) {
    throw InputError("color reduction needs at least c * ell + 1 edges");
  }
  if (!is_connected(g)) throw InputError("color reduction needs a connected graph");
  const bool rainbow_full = graph_rainbow_degree(g) == c;
  for (Color j = 1; j <= c; ++j) {
    for (Color t = 1; t <= c; ++t) {
      if (j == t) continue;
      auto merged = merge_colors(g, j, t);
      const ColoredMultigraph& h = merged.first;
      if (static_cast<long long>(h.edge_count()) < (c - 1) * ell + 1) continue;
      if (!is_connected(h)) continue;
      if (rainbow_full && graph_rainbow_degree(h) != c - 1) continue;
      return merged;
    }
  }
  throw InternalError("no color pair can be merged within the edge bound");
}

CycleCertificate lift_cycle(const MergeRecord& record,
                            const ColoredMultigraph& original,
                            const CycleCertificate& cert) {
  const ColoredMultigraph merged =
      merge_colors(original, record.merged_color, record.target_color).first;
  if (Verdict v = verify_proper_cycle(merged, cert); !v) {
    throw InputError("lift_cycle: cycle is not proper in the merged graph: " +
                     v.reason());
  }
  const int c = original.color_count();
  const Color target_new =
      record.renumber[static_cast<std::size_t>(record.target_color)];
  std::vector<Color> back(static_cast<std::size_t>(c), 0);  // new -> old
  for (Color k = 1; k <= c; ++k) {
    if (k == record.merged_color) continue;
    back[static_cast<std::size_t>(record.renumber[static_cast<std::size_t>(k)])] = k;
  }
  CycleCertificate out = cert;
  const std::size_t len = cert.length();
  for (std::size_t i = 0; i < len; ++i) {
    const Vertex u = cert.vertices[i];
    const Vertex v = cert.vertices[(i + 1) % len];
    const Color k = cert.colors[i];
    if (k == target_new) {
      out.colors[i] = original.has_edge(u, v, record.target_color)
                          ? record.target_color
                          : record.merged_color;
    } else {
      out.colors[i] = back[static_cast<std::size_t>(k)];
    }
  }
  if (Verdict v = verify_proper_cycle(original, out); !v) {
    throw InternalError("lift_cycle: recolored cycle is improper: " +
                        v.reason());
  }
  return out;
}

}  // namespace phc
