#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "phc/certificate.hpp"
#include "phc/graph.hpp"
#include "phc/outcome.hpp"
#include "phc/surgery.hpp"

namespace phc {

/// The sufficient conditions implemented here, plus the open conjecture.
enum class Theorem {
  two_color_edges,      // "s1": c = 2, edge count
  two_color_rainbow,    // "2colrd2": c = 2, rainbow degree 2 and edge count
  multi_color_edges,    // "3colgen": 3 <= c < n, edge count
  multi_color_rainbow,  // "3colrd3": rainbow degree c and edge count
  conjecture,           // 2-connected, rainbow degree c and edge count
};

/// Short id used on the command line and in reports ("s1", "3colgen", ...).
std::string_view theorem_id(Theorem t);
/// Throws InputError for an unknown id.
Theorem parse_theorem(std::string_view id);

/// Smallest edge count the theorem requires for (n, c).
long long edge_threshold(Theorem t, int n, int c);

/// Length of the cycle the theorem promises: n, or n - 1 for the two-color
/// theorems at odd n.
int promised_length(Theorem t, int n);

/// Branch tags a theorem's solver may emit (its own, without delegated ones).
std::span<const std::string_view> branch_vocabulary(Theorem t);

struct HypothesisReport {
  Theorem theorem = Theorem::two_color_edges;
  bool satisfied = true;
  std::vector<Violation> violations;
};

/// Evaluates every hypothesis of `t` on g: vertex and color ranges, edge
/// count, rainbow degree, connectivity.
HypothesisReport check_hypotheses(const ColoredMultigraph& g, Theorem t);

/// Outcome of splicing an edge xy into a proper cycle of a two-colored graph.
struct InsertionResult {
  std::optional<CycleCertificate> cycle;  // set iff the hypothesis held
  int attach_degree_sum = 0;  // d_C(x) + d_C(y) in the other color
  int cycle_length = 0;
};

/// Grows the proper cycle `cycle` by two vertices through the edge xy.
///
/// The graph must be two-colored, `cycle` proper with length <= n - 2, x and y
/// off the cycle, and xy an edge of color `xy_color`. Let o be the other color.
/// When d^o_C(x) + d^o_C(y) > |C| some o-colored edge pq of C has o-edges to
/// both x and y in a crossing pattern, and p x y q (or p y x q) replaces it.
/// Otherwise the result carries only the witness count. Throws InputError when
/// the structural preconditions fail.
InsertionResult lemma_cycle_insertion(const ColoredMultigraph& g,
                                      const CycleCertificate& cycle, Vertex x,
                                      Vertex y, Color xy_color);

/// Finds a color merge keeping the graph connected with at least
/// (c - 1) * ell + 1 edges, and keeping rainbow degree c - 1 when it was c.
/// Ordered pairs (j, t) are tried lexicographically. Requires c >= 4,
/// m >= c * ell + 1 and a connected graph (InputError otherwise); throws
/// InternalError if no pair qualifies.
std::pair<ColoredMultigraph, MergeRecord> reduce_color_count(
    const ColoredMultigraph& g, long long ell);

/// Re-colors a proper cycle of the merged graph so it is proper in the
/// original: target-colored edges get the target color if the original has it
/// on that pair, otherwise the merged color; other colors are renumbered back.
/// Throws InputError if `cert` is not proper in the merged graph.
CycleCertificate lift_cycle(const MergeRecord& record,
                            const ColoredMultigraph& original,
                            const CycleCertificate& cert);

/// c = 2, n >= 4, m >= 2 C(n-1, 2) + n: proper Hamiltonian cycle for even n,
/// proper (n-1)-cycle for odd n.
SolveOutcome solve_2col_edges(const ColoredMultigraph& g,
                              const Budget& budget = {});

/// c = 2, n >= 9, rd = 2, m >= C(n, 2) + C(n-2, 2) + 3: same promise as above.
SolveOutcome solve_2col_rainbow(const ColoredMultigraph& g,
                                const Budget& budget = {});

/// 3 <= c < n, n >= 4, m >= c C(n-1, 2) + n: proper Hamiltonian cycle.
SolveOutcome solve_ccol_edges(const ColoredMultigraph& g,
                              const Budget& budget = {});

/// c >= 3, n >= 4, rd = c, m >= c C(n-1, 2) + c + 1: proper Hamiltonian cycle.
SolveOutcome solve_ccol_rainbow(const ColoredMultigraph& g,
                                const Budget& budget = {});

/// Three-colored graph meeting the rainbow/edge hypotheses with a vertex x
/// whose color-i degree is one. Produces a proper Hamiltonian cycle.
SolveOutcome solve_degree_one(const ColoredMultigraph& g, Vertex x, Color i,
                              const Budget& budget = {});

/// Dispatches to the solver for `t`. The conjecture has no constructive
/// solver; asking for it throws InputError.
SolveOutcome solve_theorem(const ColoredMultigraph& g, Theorem t,
                           const Budget& budget = {});

}  // namespace phc
