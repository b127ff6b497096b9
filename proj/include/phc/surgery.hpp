#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "phc/certificate.hpp"
#include "phc/graph.hpp"

namespace phc {

/// Same vertices and colors; (u, v, i) is present iff it is absent in g.
/// The color count is preserved even when some color is unused.
ColoredMultigraph complement(const ColoredMultigraph& g);

/// Spanning subgraph of the color-i edges, returned as a one-color graph.
ColoredMultigraph color_subgraph(const ColoredMultigraph& g, Color i);

/// Simple graph (as a one-color multigraph) whose edges are the pairs joined
/// in both color j and color l.
ColoredMultigraph parallel_intersection(const ColoredMultigraph& g, Color j,
                                        Color l);

/// Subgraph induced by `keep`, relabelled 0..|keep|-1 in ascending id order.
struct InducedSubgraph {
  ColoredMultigraph graph;
  std::vector<Vertex> original;  // new id -> old id
};
InducedSubgraph induced_subgraph(const ColoredMultigraph& g, VertexSet keep);

/// Maps a cycle of an induced subgraph back to original vertex ids.
CycleCertificate to_original(const InducedSubgraph& sub,
                             const CycleCertificate& cert);
PathCertificate to_original(const InducedSubgraph& sub,
                            const PathCertificate& cert);

/// Bookkeeping for recoloring one color class into another.
struct MergeRecord {
  Color merged_color = 0;  // removed color, pre-merge id
  Color target_color = 0;  // receiving color, pre-merge id
  std::vector<std::pair<Vertex, Vertex>> dropped_duplicates;  // u < v
  /// Pre-merge color id -> post-merge id; index 0 unused. The merged color
  /// maps to the target's new id.
  std::vector<Color> renumber;
};

/// Recolors every color-j edge to color t, drops resulting duplicates and
/// renumbers colors to 1..c-1 keeping their relative order. Requires c >= 3
/// and j != t.
std::pair<ColoredMultigraph, MergeRecord> merge_colors(
    const ColoredMultigraph& g, Color j, Color t);

/// Where the contracted vertex takes its color-k neighbors from.
enum class Inherit { none, from_a, from_b, intersection };

/// Per-color neighbor assignment for the contracted vertex.
struct ContractionRule {
  std::vector<Inherit> by_color;  // index k-1

  static ContractionRule uniform(int c, Inherit how);
  Inherit operator()(Color k) const { return by_color[k - 1]; }
  ContractionRule& set(Color k, Inherit how) {
    by_color[k - 1] = how;
    return *this;
  }
};

/// Result of replacing {center, a, b} (or {a, b} when center == a) by one new
/// vertex. Surviving vertices keep their relative order; the new vertex is
/// last.
struct Contraction {
  ColoredMultigraph graph;
  std::vector<Vertex> original;  // new id -> old id; -1 for the merged vertex
  Vertex merged = -1;            // id of the new vertex in `graph`
  Vertex center = -1;
  Vertex a = -1;
  Vertex b = -1;
  ContractionRule rule;
  std::size_t removed_edges = 0;  // |E(g)| - |E(graph)|

  bool is_pair() const { return center == a; }
};

/// The new vertex's color-k neighbors are N^k(a), N^k(b), their intersection
/// or nothing, always taken in g minus the contracted vertices. Passing
/// center == a contracts just the pair {a, b}.
Contraction contract(const ColoredMultigraph& g, Vertex center, Vertex a,
                     Vertex b, const ContractionRule& rule);

/// Lifts a proper cycle of the contracted graph to `original`. If the merged
/// vertex is on the cycle it is expanded into the contracted vertices, trying
/// both orientations and every admissible choice of inner edge colors.
/// Returns nullopt when no expansion is proper.
std::optional<CycleCertificate> lift_through(const Contraction& ct,
                                             const ColoredMultigraph& original,
                                             const CycleCertificate& cert);

}  // namespace phc
