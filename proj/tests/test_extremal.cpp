#include <gtest/gtest.h>

#include <string>
#include <vector>

#include "phc/errors.hpp"
#include "phc/exact.hpp"
#include "phc/extremal.hpp"
#include "phc/harness.hpp"
#include "support.hpp"

using namespace phc;
namespace fixtures = phc::testing;

TEST(Extremal, EdgeCountsSitOneBelowTheThreshold) {
  for (int n : {4, 6, 8, 12}) {
    const ExtremalInstance e = extremal_2col_edges(n);
    EXPECT_EQ(static_cast<long long>(e.graph.edge_count()),
              edge_threshold(Theorem::two_color_edges, n, 2) - 1);
  }
  EXPECT_EQ(extremal_2col_edges(4).graph.edge_count(), 9u);
  for (int n : {10, 12}) {
    EXPECT_EQ(static_cast<long long>(extremal_2col_rainbow(n).graph.edge_count()),
              edge_threshold(Theorem::two_color_rainbow, n, 2) - 1);
  }
  for (auto [n, c] : {std::pair{5, 3}, {6, 4}, {8, 7}}) {
    EXPECT_EQ(static_cast<long long>(extremal_ccol_edges(n, c).graph.edge_count()),
              edge_threshold(Theorem::multi_color_edges, n, c) - 1);
  }
  for (auto [n, c] : {std::pair{4, 3}, {6, 5}, {7, 3}}) {
    EXPECT_EQ(static_cast<long long>(extremal_ccol_rainbow(n, c).graph.edge_count()),
              edge_threshold(Theorem::multi_color_rainbow, n, c) - 1);
  }
  for (auto [n, c] : {std::pair{10, 3}, {11, 4}}) {
    EXPECT_EQ(static_cast<long long>(extremal_conjecture(n, c).graph.edge_count()),
              edge_threshold(Theorem::conjecture, n, c) - 1);
  }
}

TEST(Extremal, ClaimsHold) {
  const std::vector<ExtremalInstance> all{
      extremal_2col_edges(6),     extremal_2col_edges(8),
      extremal_2col_rainbow(10),  extremal_ccol_edges(6, 3),
      extremal_ccol_edges(6, 5),  extremal_ccol_rainbow(6, 3),
      extremal_ccol_rainbow(7, 4), extremal_conjecture(10, 3)};
  for (const ExtremalInstance& e : all) {
    const SweepRecord r = check_extremal(e);
    EXPECT_TRUE(r.agreement) << e.spec.family << " " << e.spec.n << " "
                             << (r.notes.empty() ? "" : r.notes.front());
    EXPECT_EQ(r.exact, Status::infeasible);
    EXPECT_FALSE(r.hypotheses_satisfied);
  }
}

TEST(Extremal, SmallInstancesAgreeWithBruteForce) {
  EXPECT_FALSE(fixtures::naive_has_proper_cycle(extremal_2col_edges(4).graph, 4));
  EXPECT_FALSE(fixtures::naive_has_proper_cycle(extremal_2col_edges(6).graph, 6));
  EXPECT_FALSE(fixtures::naive_has_proper_cycle(extremal_ccol_edges(5, 3).graph, 5));
  EXPECT_FALSE(fixtures::naive_has_proper_cycle(extremal_ccol_rainbow(5, 3).graph, 5));
  EXPECT_FALSE(fixtures::naive_has_proper_cycle(extremal_ccol_rainbow(6, 4).graph, 6));
}

TEST(Extremal, ComplementOfTwoColorRainbowShape) {
  const ColoredMultigraph g = extremal_2col_rainbow(10).graph;
  EXPECT_EQ(graph_rainbow_degree(g), 2);
  EXPECT_FALSE(has_perfect_matching_in_color(g, 2));
  EXPECT_EQ(complement(g).edge_count(), 15u);
}

TEST(Extremal, ConjectureShapeIsTwoConnected) {
  const ColoredMultigraph g = extremal_conjecture(10, 3).graph;
  EXPECT_TRUE(is_2connected(g));
  EXPECT_EQ(graph_rainbow_degree(g), 3);
  EXPECT_EQ(find_proper_ham_cycle(g).status, Status::infeasible);
}

TEST(Extremal, OddOrderEdgeShapeStillHasAnEvenCycle) {
  // The two-color edge shape built directly at n = 7. The theorem only
  // promises six vertices at odd n, and the exact search finds them.
  std::vector<Edge> e;
  for (Vertex u = 0; u < 6; ++u) {
    for (Vertex v = u + 1; v < 6; ++v) {
      e.push_back({u, v, 1});
      e.push_back({u, v, 2});
    }
    e.push_back({u, 6, 1});
  }
  const ColoredMultigraph g(7, 2, e);
  EXPECT_EQ(find_proper_cycle_of_length(g, 6).status, Status::found);
  EXPECT_EQ(find_proper_ham_cycle(g).status, Status::infeasible);
}

TEST(Extremal, RainbowCompleteHasACycle) {
  const ExtremalInstance e = generate_family("rainbow-complete", 6, 3);
  EXPECT_FALSE(e.spec.claims.no_proper_ham_cycle);
  const SweepRecord r = check_extremal(e);
  EXPECT_TRUE(r.agreement);
  EXPECT_EQ(r.exact, Status::found);
}

TEST(Extremal, ParameterErrors) {
  EXPECT_THROW(extremal_2col_edges(5), InputError);
  EXPECT_THROW(extremal_2col_edges(2), InputError);
  EXPECT_THROW(extremal_2col_rainbow(8), InputError);
  EXPECT_THROW(extremal_2col_rainbow(11), InputError);
  EXPECT_THROW(extremal_ccol_edges(5, 5), InputError);
  EXPECT_THROW(extremal_ccol_edges(5, 2), InputError);
  EXPECT_THROW(extremal_ccol_rainbow(3, 3), InputError);
  EXPECT_THROW(extremal_conjecture(9, 3), InputError);
  EXPECT_THROW(generate_family("nope", 6, 3), InputError);
  EXPECT_EQ(family_ids().size(), 6u);
  for (std::string_view id : family_ids()) {
    EXPECT_NO_THROW(generate_family(id, 10, 3)) << id;
  }
}
