#include <gtest/gtest.h>

#include <set>
#include <string>

#include "phc/errors.hpp"
#include "phc/harness.hpp"

using namespace phc;

namespace {

CorpusSpec spec_for(Theorem t, int n_min, int n_max, int c_min, int c_max) {
  CorpusSpec s;
  s.theorem = t;
  s.n_min = n_min;
  s.n_max = n_max;
  s.c_min = c_min;
  s.c_max = c_max;
  s.seed = 99;
  return s;
}

}  // namespace

TEST(Sampler, DeterministicInSeedAndIndex) {
  const CorpusSpec s = spec_for(Theorem::multi_color_edges, 5, 8, 3, 4);
  for (std::size_t i = 0; i < 10; ++i) EXPECT_EQ(sample_graph(s, i), sample_graph(s, i));
  CorpusSpec other = s;
  other.seed = 100;
  int differ = 0;
  for (std::size_t i = 0; i < 10; ++i) differ += sample_graph(s, i) == sample_graph(other, i) ? 0 : 1;
  EXPECT_GT(differ, 5);
  EXPECT_NE(sample_graph(s, 0), sample_graph(s, 1));
}

TEST(Sampler, AtLeastThresholdMeetsEveryHypothesis) {
  for (Theorem t : {Theorem::two_color_edges, Theorem::two_color_rainbow,
                    Theorem::multi_color_edges, Theorem::multi_color_rainbow,
                    Theorem::conjecture}) {
    CorpusSpec s = spec_for(t, 4, 11, 2, 2);
    if (t == Theorem::two_color_rainbow) s.n_min = 9;
    if (t == Theorem::conjecture) s.n_min = 10;
    if (t == Theorem::multi_color_edges || t == Theorem::multi_color_rainbow ||
        t == Theorem::conjecture) {
      s.c_min = 3;
      s.c_max = 4;
    }
    s.steer = Steer::mixed;
    for (std::size_t i = 0; i < 40; ++i) {
      const ColoredMultigraph g = sample_graph(s, i);
      EXPECT_TRUE(check_hypotheses(g, t).satisfied) << theorem_id(t) << " #" << i;
      EXPECT_GE(static_cast<long long>(g.edge_count()),
                edge_threshold(t, g.vertex_count(), g.color_count()));
    }
  }
}

TEST(Sampler, ThresholdMinusOneAndAbsolute) {
  CorpusSpec s = spec_for(Theorem::multi_color_rainbow, 5, 7, 3, 3);
  s.rule = EdgeRule::threshold_minus_one;
  s.require_full_rainbow = true;
  for (std::size_t i = 0; i < 20; ++i) {
    const ColoredMultigraph g = sample_graph(s, i);
    EXPECT_EQ(static_cast<long long>(g.edge_count()),
              edge_threshold(s.theorem, g.vertex_count(), 3) - 1);
    EXPECT_EQ(graph_rainbow_degree(g), 3);
  }
  CorpusSpec a = spec_for(Theorem::two_color_edges, 6, 6, 2, 2);
  a.rule = EdgeRule::absolute;
  a.min_edges = 10;
  a.max_edges = 12;
  for (std::size_t i = 0; i < 20; ++i) {
    const auto m = sample_graph(a, i).edge_count();
    EXPECT_GE(m, 10u);
    EXPECT_LE(m, 12u);
  }
}

TEST(Sampler, StructuralRequirements) {
  CorpusSpec s = spec_for(Theorem::two_color_edges, 6, 9, 3, 3);
  s.rule = EdgeRule::absolute;
  s.min_edges = 30;
  s.require_2connected = true;
  s.require_full_rainbow = true;
  for (std::size_t i = 0; i < 20; ++i) {
    const ColoredMultigraph g = sample_graph(s, i);
    EXPECT_TRUE(is_2connected(g));
    EXPECT_EQ(graph_rainbow_degree(g), 3);
  }
}

TEST(Sampler, ImpossibleConstraintsAreAnInputError) {
  CorpusSpec s = spec_for(Theorem::two_color_edges, 5, 5, 2, 2);
  s.rule = EdgeRule::absolute;
  s.max_edges = 3;
  s.require_connected = true;
  EXPECT_THROW(sample_graph(s, 0), InputError);
  CorpusSpec bad = spec_for(Theorem::two_color_edges, 6, 5, 2, 2);
  EXPECT_THROW(sample_graph(bad, 0), InputError);
}

TEST(CrossCheck, SatisfiedAndViolatedInstances) {
  const SweepRecord ok = cross_check(rainbow_complete(6, 2), Theorem::two_color_edges);
  EXPECT_TRUE(ok.hypotheses_satisfied);
  EXPECT_EQ(ok.constructive, Status::found);
  EXPECT_EQ(ok.exact, Status::found);
  EXPECT_TRUE(ok.certificate_ok);
  EXPECT_TRUE(ok.agreement);
  EXPECT_FALSE(ok.tags.empty());

  const SweepRecord no = cross_check(extremal_2col_edges(6).graph, Theorem::two_color_edges);
  EXPECT_FALSE(no.hypotheses_satisfied);
  EXPECT_FALSE(no.constructive.has_value());
  EXPECT_EQ(no.exact, Status::infeasible);
  EXPECT_TRUE(no.agreement);

  const SweepRecord odd = cross_check(rainbow_complete(7, 2), Theorem::two_color_edges);
  EXPECT_TRUE(odd.agreement);
  EXPECT_TRUE(odd.notes.empty());
}

TEST(CrossCheck, CorpusSummaryIsThreadIndependent) {
  CorpusSpec s = spec_for(Theorem::multi_color_rainbow, 5, 7, 3, 4);
  s.samples = 24;
  SweepOptions one;
  SweepOptions four;
  four.threads = 4;
  const SweepReport a = cross_check_corpus(s, one);
  const SweepReport b = cross_check_corpus(s, four);
  ASSERT_EQ(a.records.size(), 24u);
  EXPECT_EQ(a.summary.disagreements, 0u);
  EXPECT_EQ(a.summary.agreements, 24u);
  for (std::size_t i = 0; i < a.records.size(); ++i) {
    EXPECT_EQ(a.records[i].index, i);
    EXPECT_EQ(a.records[i].edges, b.records[i].edges);
    EXPECT_EQ(a.records[i].tags, b.records[i].tags);
  }
}

TEST(Tightness, FamiliesAreTight) {
  const SweepReport r = tightness_sweep("3colrd3-extremal", {{5, 3}, {6, 3}, {6, 4}});
  EXPECT_EQ(r.kind, "tightness");
  EXPECT_EQ(r.summary.exact_infeasible, 3u);
  EXPECT_EQ(r.summary.disagreements, 0u);
  EXPECT_THROW(tightness_sweep("s1-extremal", {{6, 2}, {7, 2}}), InputError);
}

TEST(Coverage, CountsTagsInVocabularyOrder) {
  CorpusSpec s = spec_for(Theorem::two_color_edges, 4, 10, 2, 2);
  s.samples = 60;
  s.steer = Steer::mixed;
  const CoverageTable t = branch_coverage(Theorem::two_color_edges, s);
  EXPECT_EQ(t.instances, 60u);
  EXPECT_EQ(t.failures, 0u);
  ASSERT_EQ(t.hits.size(), branch_vocabulary(Theorem::two_color_edges).size());
  EXPECT_EQ(t.hits[0].first, "base-case-exact");
  EXPECT_GT(t.hits[0].second, 0u);
  EXPECT_THROW(branch_coverage(Theorem::conjecture, s), InputError);
}

TEST(Conjecture, SmallSweepFindsCycles) {
  const SweepReport r = conjecture_sweep(10, 3, 6, 7);
  EXPECT_EQ(r.kind, "conjecture");
  EXPECT_EQ(r.summary.total, 6u);
  EXPECT_EQ(r.summary.agreements, 6u);
  for (const SweepRecord& rec : r.records) EXPECT_TRUE(rec.hypotheses_satisfied);
}

TEST(Conjecture, BelowTenNeedsTheFlag) {
  EXPECT_THROW(conjecture_sweep(8, 3, 2, 1), InputError);
  const SweepReport r = conjecture_sweep(8, 3, 4, 1, {}, true);
  for (const SweepRecord& rec : r.records) {
    ASSERT_FALSE(rec.notes.empty());
    EXPECT_EQ(rec.notes.front(), "outside the statement (n < 10)");
  }
}
