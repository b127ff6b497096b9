#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "phc/constructive.hpp"
#include "phc/extremal.hpp"
#include "phc/graph.hpp"
#include "phc/outcome.hpp"

namespace phc {

/// How a sampled graph's edge count relates to the theorem threshold.
enum class EdgeRule {
  at_least_threshold,   // every hypothesis of the theorem must hold
  threshold_minus_one,  // m = threshold - 1, other constraints still apply
  absolute,             // min_edges..max_edges, theorem ignored
};

/// Where edge deletions go when thinning the rainbow complete graph.
enum class Steer {
  none,         // uniform
  focus,        // a random share of deletions at one vertex
  sparse_color, // one vertex keeps a single edge of one color
  spread,       // deletions spread so no vertex stays near full degree
  mixed,        // cycles through the modes above by sample index
};

struct CorpusSpec {
  int n_min = 4;
  int n_max = 4;
  int c_min = 2;
  int c_max = 2;
  Theorem theorem = Theorem::two_color_edges;
  EdgeRule rule = EdgeRule::at_least_threshold;
  long long min_edges = 0;   // absolute rule only
  long long max_edges = -1;  // absolute rule only; -1 = c C(n, 2)
  bool require_full_rainbow = false;  // rd = c
  bool require_connected = true;
  bool require_2connected = false;
  Steer steer = Steer::none;
  bool allow_below_min_n = false;  // ignore the theorem's vertex-count bound
  std::size_t samples = 100;
  std::uint64_t seed = 0;
};

/// Graph number `index` of the corpus. Deterministic in (spec, index) and
/// independent of the standard library's distribution implementations.
/// Throws InputError when 10^4 attempts fail to meet the constraints.
ColoredMultigraph sample_graph(const CorpusSpec& spec, std::size_t index);

struct SweepOptions {
  Budget budget;
  unsigned threads = 1;  // 0 = hardware concurrency
};

/// One checked instance. Which fields are set depends on the sweep.
struct SweepRecord {
  std::size_t index = 0;
  std::string label;  // theorem id or family id
  int n = 0;
  int c = 0;
  long long edges = 0;
  long long threshold = 0;
  bool hypotheses_satisfied = false;
  std::vector<Violation> violations;
  std::optional<Status> constructive;
  std::optional<Status> exact;
  bool certificate_ok = false;
  bool agreement = false;
  std::vector<std::string> tags;
  std::vector<std::string> notes;  // failed checks, in words
  double constructive_ms = 0;
  double exact_ms = 0;
};

struct SweepSummary {
  std::size_t total = 0;
  std::size_t hypotheses_satisfied = 0;
  std::size_t constructive_found = 0;
  std::size_t exact_found = 0;
  std::size_t exact_infeasible = 0;
  std::size_t timeouts = 0;
  std::size_t agreements = 0;
  std::size_t disagreements = 0;
};

struct SweepReport {
  std::string kind;  // "cross-check", "tightness", "coverage", "conjecture"
  std::vector<SweepRecord> records;
  SweepSummary summary;
};

/// Checks g against theorem t. With the hypotheses satisfied it runs the
/// constructive solver and the exact solver; agreement means both found a
/// cycle of the promised length and the certificate verifies. With them
/// violated the exact outcome is still recorded and agreement is vacuous.
/// For the conjecture only the exact solver runs.
SweepRecord cross_check(const ColoredMultigraph& g, Theorem t,
                        const Budget& budget = {});

/// cross_check over every graph of the corpus.
SweepReport cross_check_corpus(const CorpusSpec& spec,
                               const SweepOptions& options = {});

/// Re-verifies an extremal instance: edge count equals the claim and the
/// threshold minus one, the exact solver finds no proper Hamiltonian cycle,
/// and every claimed property holds.
SweepRecord check_extremal(const ExtremalInstance& instance,
                           const Budget& budget = {});

/// check_extremal for each (n, c) of a family.
SweepReport tightness_sweep(const std::string& family,
                            const std::vector<std::pair<int, int>>& params,
                            const SweepOptions& options = {});

struct CoverageTable {
  Theorem theorem = Theorem::two_color_edges;
  std::vector<std::pair<std::string, std::size_t>> hits;  // vocabulary order
  std::vector<std::string> unhit;
  std::vector<std::string> other_tags;  // delegated or fallback tags seen
  std::size_t instances = 0;
  std::size_t failures = 0;  // constructive runs that did not find a cycle
};

/// Tag histogram of the constructive solver over explicit graphs.
CoverageTable branch_coverage(Theorem t,
                              const std::vector<ColoredMultigraph>& graphs,
                              const SweepOptions& options = {});
/// Tag histogram over a sampled corpus.
CoverageTable branch_coverage(Theorem t, const CorpusSpec& spec,
                              const SweepOptions& options = {});

/// Samples 2-connected graphs with rd = c and at least the conjectured edge
/// count, and runs the exact solver on each. A record without agreement is a
/// counterexample candidate (or a timeout). n < 10 is outside the statement
/// and needs allow_small; such records carry a note.
SweepReport conjecture_sweep(int n, int c, std::size_t samples,
                             std::uint64_t seed,
                             const SweepOptions& options = {},
                             bool allow_small = false);

}  // namespace phc
