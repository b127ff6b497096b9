#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace phc {

using Vertex = int;
using Color = int;  // 1-based: colors are 1..c

/// Bitmask over vertex ids; bit x set means vertex x is a member.
using VertexSet = std::uint64_t;
/// Bitmask over color ids; bit k set means color k is a member (bit 0 unused).
using ColorSet = std::uint64_t;

inline constexpr int kMaxVertices = 64;
inline constexpr int kMaxColors = 62;

constexpr VertexSet bit(int i) { return VertexSet{1} << i; }
/// Vertices with id strictly greater than x.
constexpr VertexSet above(int x) { return x >= 63 ? 0 : ~(bit(x + 1) - 1); }
constexpr int count(std::uint64_t s) { return std::popcount(s); }
constexpr int lowest(std::uint64_t s) { return std::countr_zero(s); }

/// Iterates the set bits of a mask in ascending order.
template <typename F>
void for_each_bit(std::uint64_t s, F&& f) {
  while (s != 0) {
    f(lowest(s));
    s &= s - 1;
  }
}

struct Edge {
  Vertex u = 0;
  Vertex v = 0;
  Color color = 1;

  auto operator<=>(const Edge&) const = default;
};

/// Immutable edge-colored multigraph on vertices 0..n-1 with colors 1..c.
///
/// Parallel edges are allowed as long as they carry different colors. Storage
/// is one neighbor bitset per (color, vertex), so edge queries are O(1) and
/// the number of vertices is capped at kMaxVertices.
class ColoredMultigraph {
 public:
  ColoredMultigraph() = default;

  /// Throws InputError on out-of-range ids, loops, or a repeated
  /// (unordered pair, color).
  ColoredMultigraph(int n, int c, std::span<const Edge> edges);

  /// Builds from per-color adjacency; masks are assumed symmetric and loop-free.
  static ColoredMultigraph from_adjacency(int n, int c,
                                          std::vector<VertexSet> adjacency);

  int vertex_count() const { return n_; }
  int color_count() const { return c_; }
  std::size_t edge_count() const { return m_; }

  VertexSet all_vertices() const {
    return n_ == 64 ? ~VertexSet{0} : bit(n_) - 1;
  }
  ColorSet all_colors() const { return (ColorSet{1} << (c_ + 1)) - 2; }

  bool has_vertex(Vertex x) const { return x >= 0 && x < n_; }
  bool has_color(Color k) const { return k >= 1 && k <= c_; }

  bool has_edge(Vertex u, Vertex v, Color k) const {
    return (neighbors(u, k) >> v) & 1U;
  }
  /// Neighbors of x joined by a color-k edge. No range checks.
  VertexSet neighbors(Vertex x, Color k) const {
    return adj_[static_cast<std::size_t>(k - 1) * n_ + x];
  }
  /// Neighbors of x in any color.
  VertexSet neighbors(Vertex x) const { return any_[x]; }
  /// Colors present between u and v.
  ColorSet colors_between(Vertex u, Vertex v) const;
  int multiplicity(Vertex u, Vertex v) const {
    return count(colors_between(u, v));
  }
  /// Number of colored edges incident to x (parallel edges counted
  /// separately).
  int degree(Vertex x) const;

  /// Edges in canonical order: (min endpoint, max endpoint, color).
  std::vector<Edge> edges() const;

  friend bool operator==(const ColoredMultigraph&,
                         const ColoredMultigraph&) = default;

 private:
  int n_ = 0;
  int c_ = 1;
  std::size_t m_ = 0;
  std::vector<VertexSet> adj_;
  std::vector<VertexSet> any_;
};

/// |N^i(x)|. Throws InputError on a bad vertex or color.
int colored_degree(const ColoredMultigraph& g, Vertex x, Color i);

/// Number of colors appearing on edges at x. Throws InputError on a bad vertex.
int rainbow_degree(const ColoredMultigraph& g, Vertex x);

/// Minimum rainbow degree over all vertices. Throws InputError if n = 0.
int graph_rainbow_degree(const ColoredMultigraph& g);

/// Connectivity of the underlying simple graph. The empty graph and a single
/// vertex count as connected.
bool is_connected(const ColoredMultigraph& g);

/// Connected, at least three vertices, and no cut vertex.
bool is_2connected(const ColoredMultigraph& g);

/// Vertices reachable from `from` through `within` (which should contain
/// `from`), using edges of any color.
VertexSet reachable(const ColoredMultigraph& g, Vertex from, VertexSet within);

/// Binomial coefficient for small arguments; zero when k > n or n < 0.
constexpr long long choose2(long long n) { return n < 2 ? 0 : n * (n - 1) / 2; }

}  // namespace phc
