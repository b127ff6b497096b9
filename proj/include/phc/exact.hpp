#pragma once

#include <optional>

#include "phc/graph.hpp"
#include "phc/outcome.hpp"

namespace phc {

/// Shape constraints for a proper path search.
struct SearchConstraints {
  std::optional<Vertex> required_start;
  std::optional<Vertex> required_end;
  ColorSet first_color_in = 0;  // 0 = unconstrained
  ColorSet last_color_in = 0;   // 0 = unconstrained
  bool first_equals_last_color = false;
  int target_length = 0;  // vertices to cover; 0 = all of them
};

/// Exhaustive search for a proper Hamiltonian cycle.
///
/// Returns found with a verified certificate, infeasible when the search space
/// is exhausted, or timeout when the budget runs out.
SolveOutcome find_proper_ham_cycle(const ColoredMultigraph& g,
                                   const Budget& budget = {});

/// Exhaustive search for a proper path honoring `constraints`. Throws
/// InputError on contradictory or out-of-range constraints.
SolveOutcome find_proper_path(const ColoredMultigraph& g,
                              const SearchConstraints& constraints,
                              const Budget& budget = {});

/// Exhaustive search for a proper cycle through exactly `length` vertices.
/// Throws InputError unless 3 <= length <= n.
SolveOutcome find_proper_cycle_of_length(const ColoredMultigraph& g,
                                         int length, const Budget& budget = {});

/// Hamiltonian cycle of the underlying simple graph, colors ignored. Each
/// certificate edge is labelled with the lowest color present on that pair.
SolveOutcome find_ham_cycle_simple(const ColoredMultigraph& g,
                                   const Budget& budget = {});

/// True iff the color-i edges contain a perfect matching. Exact, exponential
/// in the worst case, memoized on the set of unmatched vertices.
bool has_perfect_matching_in_color(const ColoredMultigraph& g, Color i);

}  // namespace phc
