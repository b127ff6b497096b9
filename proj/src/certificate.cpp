#include "phc/certificate.hpp"

namespace phc {

const char* to_string(Defect d) {
  switch (d) {
    case Defect::none: return "ok";
    case Defect::too_short: return "too-short";
    case Defect::size_mismatch: return "size-mismatch";
    case Defect::vertex_out_of_range: return "vertex-out-of-range";
    case Defect::repeated_vertex: return "repeated-vertex";
    case Defect::color_out_of_range: return "color-out-of-range";
    case Defect::missing_edge: return "missing-edge";
    case Defect::adjacent_equal_colors: return "adjacent-equal-colors";
  }
  return "unknown";
}

std::string Verdict::reason() const {
  std::string out = to_string(defect);
  if (index) out += " at index " + std::to_string(*index);
  return out;
}

namespace {

// Shared walk check. `closed` adds the wraparound edge and adjacency pair.
Verdict check_walk(const ColoredMultigraph& g,
                   const std::vector<Vertex>& vertices,
                   const std::vector<Color>& colors, bool closed,
                   bool require_proper) {
  const std::size_t len = vertices.size();
  const std::size_t min_len = closed ? 3 : 1;
  if (len < min_len) return {Defect::too_short, std::nullopt};
  const std::size_t edge_count = closed ? len : len - 1;
  if (colors.size() != edge_count) return {Defect::size_mismatch, std::nullopt};

  VertexSet seen = 0;
  for (std::size_t i = 0; i < len; ++i) {
    if (!g.has_vertex(vertices[i])) return {Defect::vertex_out_of_range, i};
    if ((seen >> vertices[i]) & 1U) return {Defect::repeated_vertex, i};
    seen |= bit(vertices[i]);
  }
  for (std::size_t i = 0; i < edge_count; ++i) {
    if (!g.has_color(colors[i])) return {Defect::color_out_of_range, i};
  }
  for (std::size_t i = 0; i < edge_count; ++i) {
    Vertex a = vertices[i];
    Vertex b = vertices[(i + 1) % len];
    if (!g.has_edge(a, b, colors[i])) return {Defect::missing_edge, i};
  }
  if (require_proper) {
    const std::size_t pairs = closed ? edge_count : edge_count - (edge_count > 0);
    for (std::size_t i = 0; i < pairs; ++i) {
      if (colors[i] == colors[(i + 1) % edge_count]) {
        return {Defect::adjacent_equal_colors, i};
      }
    }
  }
  return {};
}

}  // namespace

Verdict verify_proper_cycle(const ColoredMultigraph& g,
                            const CycleCertificate& cert) {
  return check_walk(g, cert.vertices, cert.colors, true, true);
}

Verdict verify_proper_path(const ColoredMultigraph& g,
                           const PathCertificate& cert) {
  return check_walk(g, cert.vertices, cert.colors, false, true);
}

Verdict verify_cycle_edges(const ColoredMultigraph& g,
                           const CycleCertificate& cert) {
  return check_walk(g, cert.vertices, cert.colors, true, false);
}

}  // namespace phc
