#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "phc/graph.hpp"

namespace phc {

/// A cycle v_0 .. v_{L-1} v_0; colors[i] colors the edge v_i v_{i+1 mod L}.
struct CycleCertificate {
  std::vector<Vertex> vertices;
  std::vector<Color> colors;

  std::size_t length() const { return vertices.size(); }
  bool operator==(const CycleCertificate&) const = default;
};

/// An open walk v_0 .. v_{L-1}; colors[i] colors the edge v_i v_{i+1}.
struct PathCertificate {
  std::vector<Vertex> vertices;
  std::vector<Color> colors;

  std::size_t length() const { return vertices.size(); }
  bool operator==(const PathCertificate&) const = default;
};

enum class Defect {
  none,
  too_short,
  size_mismatch,
  vertex_out_of_range,
  repeated_vertex,
  color_out_of_range,
  missing_edge,
  adjacent_equal_colors,
};

const char* to_string(Defect d);

/// Result of checking a certificate; `index` locates the offending position.
struct Verdict {
  Defect defect = Defect::none;
  std::optional<std::size_t> index;

  bool ok() const { return defect == Defect::none; }
  explicit operator bool() const { return ok(); }
  std::string reason() const;
};

/// Checks that `cert` is a properly colored cycle of `g`. Length is not
/// required to equal n.
Verdict verify_proper_cycle(const ColoredMultigraph& g,
                            const CycleCertificate& cert);

/// Checks that `cert` is a properly colored path of `g` (at least one vertex).
Verdict verify_proper_path(const ColoredMultigraph& g,
                           const PathCertificate& cert);

/// Checks the cycle structure and edge existence only; colors of adjacent
/// edges may coincide. Used for Hamiltonian cycles of underlying simple graphs.
Verdict verify_cycle_edges(const ColoredMultigraph& g,
                           const CycleCertificate& cert);

}  // namespace phc
