#pragma once

// Shared machinery for the constructive solvers. Not installed.

#include <chrono>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "phc/constructive.hpp"
#include "phc/errors.hpp"
#include "phc/exact.hpp"

namespace phc::detail {

/// Thrown through the recursion when an oracle call runs out of budget.
struct SearchTimeout {};

/// Per-solve state: the budget, where trace tags go, and the tag prefix for
/// delegated theorems.
class Context {
 public:
  Context(const Budget& budget, TheoremTrace& trace, std::uint64_t& nodes)
      : budget_(budget),
        deadline_(std::chrono::steady_clock::now() + budget.max_time),
        trace_(&trace),
        nodes_(&nodes) {}

  /// Same trace, but tags get "<id>/" prepended.
  Context delegate(std::string_view id) const {
    Context sub = *this;
    sub.prefix_ = prefix_ + std::string(id) + "/";
    return sub;
  }

  void tag(std::string_view t) { trace_->add(prefix_ + std::string(t)); }

  /// Exact search for a proper cycle that an invoked result guarantees.
  /// Throws InternalError if the search proves there is none.
  CycleCertificate guaranteed_cycle(const ColoredMultigraph& g, int length,
                                    std::string_view why);

  /// Exact proper path search; nullopt when none exists.
  std::optional<PathCertificate> path(const ColoredMultigraph& g,
                                      const SearchConstraints& sc);

  /// Exact proper cycle search; nullopt when none exists.
  std::optional<CycleCertificate> cycle(const ColoredMultigraph& g, int length);

  /// Hamiltonian cycle of a simple graph; nullopt when none exists.
  std::optional<CycleCertificate> simple_cycle(const ColoredMultigraph& g);

 private:
  /// What is left of the budget; throws SearchTimeout when nothing is.
  Budget remaining() const;
  void account(const SolveOutcome& out);

  Budget budget_;
  std::chrono::steady_clock::time_point deadline_;
  TheoremTrace* trace_;
  std::uint64_t* nodes_;
  std::string prefix_;
};

/// Runs hypotheses, the body, timeout conversion and final verification.
template <typename Body>
SolveOutcome run_solver(const ColoredMultigraph& g, Theorem t,
                        const Budget& budget, Body&& body);

/// Proper cycle through the fixed chain `chain` (consecutive in the cycle)
/// closed by a path through the other vertices, covering `length` vertices in
/// total. Chain colors, both connecting edges and the path are searched.
std::optional<CycleCertificate> close_chain(const ColoredMultigraph& g,
                                            const std::vector<Vertex>& chain,
                                            int length, Context& ctx);

/// Two-colored splice of the edge ab (color e) into an edge pq of `cycle`
/// colored the other way, as p a b q or p b a q.
std::optional<CycleCertificate> splice_edge(const ColoredMultigraph& g,
                                            const CycleCertificate& cycle,
                                            Vertex a, Vertex b, Color e);

/// Drops vertex h, takes a proper Hamiltonian path of the rest and closes it
/// through h. Throws InternalError if the closing colors cannot be chosen.
CycleCertificate join_through_vertex(const ColoredMultigraph& g, Vertex h,
                                     Context& ctx);

// Solver bodies, callable recursively and across theorems.
CycleCertificate two_color_edges(const ColoredMultigraph& g, Context& ctx);
CycleCertificate two_color_rainbow(const ColoredMultigraph& g, Context& ctx);
CycleCertificate multi_color_edges(const ColoredMultigraph& g, Context& ctx);
CycleCertificate multi_color_rainbow(const ColoredMultigraph& g, Context& ctx);
CycleCertificate degree_one(const ColoredMultigraph& g, Vertex x, Color i,
                            Context& ctx);

/// Throws InternalError unless g meets the hypotheses of t.
void require_hypotheses(const ColoredMultigraph& g, Theorem t,
                        std::string_view where);

template <typename Body>
SolveOutcome run_solver(const ColoredMultigraph& g, Theorem t,
                        const Budget& budget, Body&& body) {
  SolveOutcome out;
  HypothesisReport report = check_hypotheses(g, t);
  if (!report.satisfied) {
    out.status = Status::hypothesis_violation;
    out.violations = std::move(report.violations);
    return out;
  }
  Context ctx(budget, out.trace, out.nodes);
  try {
    out.cycle = body(g, ctx);
  } catch (const SearchTimeout&) {
    out.status = Status::timeout;
    return out;
  }
  Verdict v = verify_proper_cycle(g, *out.cycle);
  const auto want = static_cast<std::size_t>(promised_length(t, g.vertex_count()));
  if (!v || out.cycle->length() != want) {
    throw InternalError(std::string(theorem_id(t)) +
                        " solver returned an invalid cycle: " + v.reason());
  }
  out.status = Status::found;
  return out;
}

}  // namespace phc::detail
