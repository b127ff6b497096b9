#include <array>
#include <string>

#include "constructive_detail.hpp"
#include "phc/errors.hpp"

namespace phc {

namespace {

constexpr std::array<std::string_view, 5> kTwoColorEdges{
    "base-case-exact", "abou-degree-condition", "contract-s1",
    "lift-contracted", "lemma-s0-insert"};

constexpr std::array<std::string_view, 11> kTwoColorRainbow{
    "base-case-exact", "abou-degree-condition", "contract-rd-preserved",
    "lift-contracted", "odd-cycle-splice",      "rd-drop",
    "recontract",      "case-a",                "case-b",
    "case-c",          "two-low-vertices"};

constexpr std::array<std::string_view, 8> kMultiColorEdges{
    "base-case-exact",    "merge-color",   "intersection-graph",
    "not-2connected-branch", "2connected-branch", "high-degree-vertex",
    "contract-pair",      "lift-contracted"};

constexpr std::array<std::string_view, 11> kMultiColorRainbow{
    "base-case-exact",     "merge-color",      "all-degrees-large",
    "high-degree-vertex",  "contract-pair",    "lift-contracted",
    "degree-one-lemma",    "degree-one-contract", "degree-one-direct",
    "remove-pair-path",    "contract-triple"};

Violation make_violation(std::string name, long long actual,
                         long long required,
                         std::optional<Vertex> where = std::nullopt) {
  return Violation{std::move(name), actual, required, where};
}

}  // namespace

std::string_view theorem_id(Theorem t) {
  switch (t) {
    case Theorem::two_color_edges: return "s1";
    case Theorem::two_color_rainbow: return "2colrd2";
    case Theorem::multi_color_edges: return "3colgen";
    case Theorem::multi_color_rainbow: return "3colrd3";
    case Theorem::conjecture: return "conjecture";
  }
  return "unknown";
}

Theorem parse_theorem(std::string_view id) {
  for (Theorem t :
       {Theorem::two_color_edges, Theorem::two_color_rainbow,
        Theorem::multi_color_edges, Theorem::multi_color_rainbow,
        Theorem::conjecture}) {
    if (theorem_id(t) == id) return t;
  }
  throw InputError("unknown theorem id '" + std::string(id) + "'");
}

long long edge_threshold(Theorem t, int n, int c) {
  switch (t) {
    case Theorem::two_color_edges: return 2 * choose2(n - 1) + n;
    case Theorem::two_color_rainbow: return choose2(n) + choose2(n - 2) + 3;
    case Theorem::multi_color_edges:
      return static_cast<long long>(c) * choose2(n - 1) + n;
    case Theorem::multi_color_rainbow:
      return static_cast<long long>(c) * choose2(n - 1) + c + 1;
    case Theorem::conjecture:
      return static_cast<long long>(c) * choose2(n - 2) + 4LL * c + 1;
  }
  return 0;
}

int promised_length(Theorem t, int n) {
  const bool two_color =
      t == Theorem::two_color_edges || t == Theorem::two_color_rainbow;
  return two_color && n % 2 == 1 ? n - 1 : n;
}

std::span<const std::string_view> branch_vocabulary(Theorem t) {
  switch (t) {
    case Theorem::two_color_edges: return kTwoColorEdges;
    case Theorem::two_color_rainbow: return kTwoColorRainbow;
    case Theorem::multi_color_edges: return kMultiColorEdges;
    case Theorem::multi_color_rainbow: return kMultiColorRainbow;
    case Theorem::conjecture: return {};
  }
  return {};
}

HypothesisReport check_hypotheses(const ColoredMultigraph& g, Theorem t) {
  HypothesisReport r;
  r.theorem = t;
  const int n = g.vertex_count();
  const int c = g.color_count();
  const auto m = static_cast<long long>(g.edge_count());
  auto fail = [&](Violation v) { r.violations.push_back(std::move(v)); };

  int min_n = 4;
  bool need_rainbow = false;
  int want_rd = c;
  switch (t) {
    case Theorem::two_color_edges:
      if (c != 2) fail(make_violation("color-count", c, 2));
      break;
    case Theorem::two_color_rainbow:
      min_n = 9;
      if (c != 2) fail(make_violation("color-count", c, 2));
      need_rainbow = true;
      want_rd = 2;
      break;
    case Theorem::multi_color_edges:
      if (c < 3) fail(make_violation("color-count", c, 3));
      if (c >= n) fail(make_violation("colors-below-n", c, n - 1));
      break;
    case Theorem::multi_color_rainbow:
      if (c < 3) fail(make_violation("color-count", c, 3));
      need_rainbow = true;
      break;
    case Theorem::conjecture:
      min_n = 10;
      if (c < 3) fail(make_violation("color-count", c, 3));
      need_rainbow = true;
      break;
  }
  if (n < min_n) fail(make_violation("vertex-count", n, min_n));
  const long long threshold = edge_threshold(t, n, c);
  if (m < threshold) fail(make_violation("edge-count", m, threshold));
  if (need_rainbow && n > 0) {
    Vertex worst = 0;
    for (Vertex x = 1; x < n; ++x) {
      if (rainbow_degree(g, x) < rainbow_degree(g, worst)) worst = x;
    }
    const int rd = rainbow_degree(g, worst);
    if (rd != want_rd) fail(make_violation("rainbow-degree", rd, want_rd, worst));
  }
  if (t == Theorem::conjecture) {
    if (!is_2connected(g)) fail(make_violation("2-connected", 0, 1));
  } else if (!is_connected(g)) {
    fail(make_violation("connected", 0, 1));
  }
  r.satisfied = r.violations.empty();
  return r;
}

SolveOutcome solve_theorem(const ColoredMultigraph& g, Theorem t,
                           const Budget& budget) {
  switch (t) {
    case Theorem::two_color_edges: return solve_2col_edges(g, budget);
    case Theorem::two_color_rainbow: return solve_2col_rainbow(g, budget);
    case Theorem::multi_color_edges: return solve_ccol_edges(g, budget);
    case Theorem::multi_color_rainbow: return solve_ccol_rainbow(g, budget);
    case Theorem::conjecture: break;
  }
  throw InputError("the conjecture has no constructive solver");
}

namespace detail {

void require_hypotheses(const ColoredMultigraph& g, Theorem t,
                        std::string_view where) {
  HypothesisReport r = check_hypotheses(g, t);
  if (r.satisfied) return;
  const Violation& v = r.violations.front();
  throw InternalError(std::string(where) + ": reduced instance misses " +
                      std::string(theorem_id(t)) + " hypothesis " +
                      v.hypothesis + " (" + std::to_string(v.actual) +
                      " vs " + std::to_string(v.required) + ")");
}

}  // namespace detail
}  // namespace phc
