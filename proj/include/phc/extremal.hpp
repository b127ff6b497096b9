#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "phc/constructive.hpp"
#include "phc/graph.hpp"

namespace phc {

/// Properties a construction is claimed to have. Unset optionals make no
/// claim. Every claim is re-checked by the harness, never trusted.
struct ClaimedProperties {
  bool no_proper_ham_cycle = true;
  std::optional<int> rainbow_degree;                       // rd(G)
  std::optional<std::pair<Vertex, int>> vertex_rainbow;    // rd(x) for one x
  std::optional<bool> two_connected;
  std::optional<Color> no_perfect_matching_in;
};

struct ExtremalSpec {
  std::string family;
  Theorem theorem = Theorem::two_color_edges;  // whose bound it shows tight
  int n = 0;
  int c = 0;
  long long claimed_edges = 0;
  ClaimedProperties claims;
};

struct ExtremalInstance {
  ColoredMultigraph graph;
  ExtremalSpec spec;
};

/// Every pair joined in every color: c C(n, 2) edges.
ColoredMultigraph rainbow_complete(int n, int c);

// Generators. Special vertices take the highest ids. Each throws InputError
// outside its parameter range.

/// n even >= 4: rainbow complete two-colored graph on 0..n-2, and x = n-1
/// joined to all of them in color 1.
ExtremalInstance extremal_2col_edges(int n);

/// n even >= 10: color 2 complete on A = 0..n-3 plus pendants n-2, n-1 joined
/// in color 2 to v = n-3, and color 1 complete on all n vertices.
ExtremalInstance extremal_2col_rainbow(int n);

/// 3 <= c < n: rainbow complete on 0..n-2, x = n-1 joined to all of them in
/// color 1.
ExtremalInstance extremal_ccol_edges(int n, int c);

/// n >= 4, c >= 3: rainbow complete on 0..n-2, x = n-1 joined to n-2 in every
/// color.
ExtremalInstance extremal_ccol_rainbow(int n, int c);

/// n >= 10, c >= 3: rainbow complete on 0..n-3; x1 = n-2 and x2 = n-1 joined
/// in every color to y1 = n-4 and y2 = n-3.
ExtremalInstance extremal_conjecture(int n, int c);

/// Family ids accepted by generate_family.
std::vector<std::string_view> family_ids();

/// Dispatch by id. "rainbow-complete" yields a spec that claims nothing
/// beyond its edge count. Throws InputError on an unknown id.
ExtremalInstance generate_family(std::string_view family, int n, int c);

}  // namespace phc
