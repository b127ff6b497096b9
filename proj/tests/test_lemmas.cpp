#include <gtest/gtest.h>

#include <algorithm>
#include <vector>

#include "phc/constructive.hpp"
#include "phc/errors.hpp"
#include "phc/exact.hpp"
#include "phc/extremal.hpp"
#include "phc/harness.hpp"
#include "phc/surgery.hpp"

using namespace phc;

namespace {

// A proper cycle on the vertices 0..n-3 (if any), leaving n-2 and n-1 out.
std::optional<CycleCertificate> cycle_avoiding_last_two(const ColoredMultigraph& g) {
  const int n = g.vertex_count();
  const InducedSubgraph sub = induced_subgraph(g, bit(n - 2) - 1);
  for (int len = n - 2; len >= 4; len -= 2) {
    const SolveOutcome out = find_proper_cycle_of_length(sub.graph, len);
    if (out.found()) return to_original(sub, *out.cycle);
  }
  return std::nullopt;
}

int other_degree_on(const ColoredMultigraph& g, const CycleCertificate& c,
                    Vertex x, Color other) {
  int d = 0;
  for (Vertex v : c.vertices) d += g.has_edge(x, v, other) ? 1 : 0;
  return d;
}

}  // namespace

TEST(CycleInsertion, SplicesWheneverTheCountExceedsTheLength) {
  CorpusSpec spec;
  spec.n_min = 6;
  spec.n_max = 9;
  spec.c_min = spec.c_max = 2;
  spec.rule = EdgeRule::absolute;
  spec.seed = 5;
  int spliced = 0;
  int declined = 0;
  for (std::size_t i = 0; i < 300; ++i) {
    const ColoredMultigraph g = sample_graph(spec, i);
    const int n = g.vertex_count();
    const auto cycle = cycle_avoiding_last_two(g);
    if (!cycle) continue;
    for (Color k : {1, 2}) {
      if (!g.has_edge(n - 2, n - 1, k)) continue;
      const InsertionResult r = lemma_cycle_insertion(g, *cycle, n - 2, n - 1, k);
      const int sum = other_degree_on(g, *cycle, n - 2, 3 - k) +
                      other_degree_on(g, *cycle, n - 1, 3 - k);
      EXPECT_EQ(r.attach_degree_sum, sum);
      EXPECT_EQ(r.cycle_length, static_cast<int>(cycle->length()));
      if (sum > r.cycle_length) {
        ASSERT_TRUE(r.cycle.has_value()) << i;
        EXPECT_EQ(r.cycle->length(), cycle->length() + 2);
        EXPECT_TRUE(verify_proper_cycle(g, *r.cycle).ok());
        const auto& vs = r.cycle->vertices;
        EXPECT_NE(std::find(vs.begin(), vs.end(), n - 2), vs.end());
        EXPECT_NE(std::find(vs.begin(), vs.end(), n - 1), vs.end());
        ++spliced;
      } else {
        EXPECT_FALSE(r.cycle.has_value());
        ++declined;
      }
    }
  }
  EXPECT_GT(spliced, 20);
  EXPECT_GT(declined, 0);
}

TEST(CycleInsertion, RainbowCompleteAlwaysSplices) {
  const ColoredMultigraph g = rainbow_complete(8, 2);
  const CycleCertificate c{{0, 1, 2, 3, 4, 5}, {1, 2, 1, 2, 1, 2}};
  const InsertionResult r = lemma_cycle_insertion(g, c, 6, 7, 1);
  EXPECT_EQ(r.attach_degree_sum, 12);
  ASSERT_TRUE(r.cycle.has_value());
  EXPECT_TRUE(verify_proper_cycle(g, *r.cycle).ok());
  EXPECT_EQ(r.cycle->length(), 8u);
}

TEST(CycleInsertion, Preconditions) {
  const ColoredMultigraph g = rainbow_complete(8, 2);
  const CycleCertificate c{{0, 1, 2, 3}, {1, 2, 1, 2}};
  EXPECT_THROW(lemma_cycle_insertion(g, c, 1, 7, 1), InputError);
  EXPECT_THROW(lemma_cycle_insertion(g, c, 6, 6, 1), InputError);
  const CycleCertificate improper{{0, 1, 2, 3}, {1, 1, 2, 2}};
  EXPECT_THROW(lemma_cycle_insertion(g, improper, 6, 7, 1), InputError);
  const CycleCertificate longer{{0, 1, 2, 3, 4, 5, 6, 7}, {1, 2, 1, 2, 1, 2, 1, 2}};
  EXPECT_THROW(lemma_cycle_insertion(g, longer, 6, 7, 1), InputError);
  EXPECT_THROW(lemma_cycle_insertion(rainbow_complete(8, 3), c, 6, 7, 1), InputError);
  const ColoredMultigraph no_xy = complement(ColoredMultigraph(8, 2, std::vector<Edge>{{6, 7, 1}}));
  EXPECT_THROW(lemma_cycle_insertion(no_xy, c, 6, 7, 1), InputError);
}

TEST(ColorReduction, KeepsConnectivityEdgesAndRainbowDegree) {
  for (int c : {4, 5}) {
    CorpusSpec spec;
    spec.n_min = 5;
    spec.n_max = 8;
    spec.c_min = spec.c_max = c;
    spec.theorem = Theorem::multi_color_rainbow;
    spec.steer = Steer::mixed;
    spec.seed = 17 + c;
    for (std::size_t i = 0; i < 60; ++i) {
      const ColoredMultigraph g = sample_graph(spec, i);
      const int n = g.vertex_count();
      const long long ell = choose2(n - 1) + 1;
      const auto [h, rec] = reduce_color_count(g, ell);
      EXPECT_EQ(h.color_count(), c - 1);
      EXPECT_TRUE(is_connected(h));
      EXPECT_GE(static_cast<long long>(h.edge_count()), (c - 1) * ell + 1);
      EXPECT_EQ(graph_rainbow_degree(h), c - 1);
      EXPECT_EQ(merge_colors(g, rec.merged_color, rec.target_color).first, h);
    }
  }
}

TEST(ColorReduction, Preconditions) {
  EXPECT_THROW(reduce_color_count(rainbow_complete(5, 3), 1), InputError);
  EXPECT_THROW(reduce_color_count(rainbow_complete(5, 4), 10), InputError);
  const ColoredMultigraph split(4, 4, std::vector<Edge>{{0, 1, 1}, {2, 3, 1}});
  EXPECT_THROW(reduce_color_count(split, 0), InputError);
}

TEST(LiftCycle, ProperCyclesOfTheMergedGraphStayProper) {
  CorpusSpec spec;
  spec.n_min = 5;
  spec.n_max = 7;
  spec.c_min = 4;
  spec.c_max = 5;
  spec.rule = EdgeRule::absolute;
  spec.seed = 23;
  int lifted = 0;
  for (std::size_t i = 0; i < 120; ++i) {
    const ColoredMultigraph g = sample_graph(spec, i);
    const Color j = 1 + static_cast<Color>(i % g.color_count());
    const Color t = 1 + static_cast<Color>((i / 2 + 1 + j) % g.color_count());
    if (j == t) continue;
    const auto [h, rec] = merge_colors(g, j, t);
    const SolveOutcome out = find_proper_ham_cycle(h);
    if (!out.found()) continue;
    const CycleCertificate back = lift_cycle(rec, g, *out.cycle);
    EXPECT_EQ(back.vertices, out.cycle->vertices);
    EXPECT_TRUE(verify_proper_cycle(g, back).ok()) << i;
    ++lifted;
  }
  EXPECT_GT(lifted, 50);
}

TEST(LiftCycle, RejectsCyclesThatAreNotProperAfterMerging) {
  const ColoredMultigraph g = rainbow_complete(4, 3);
  const auto [h, rec] = merge_colors(g, 3, 1);
  const CycleCertificate bad{{0, 1, 2, 3}, {1, 1, 2, 2}};
  EXPECT_THROW(lift_cycle(rec, g, bad), InputError);
}
