#include <gtest/gtest.h>

#include <vector>

#include "phc/errors.hpp"
#include "phc/exact.hpp"
#include "phc/extremal.hpp"
#include "phc/harness.hpp"
#include "phc/surgery.hpp"

using namespace phc;

TEST(Complement, IsAnInvolution) {
  CorpusSpec spec;
  spec.n_min = 3;
  spec.n_max = 7;
  spec.c_min = 1;
  spec.c_max = 3;
  spec.rule = EdgeRule::absolute;
  spec.require_connected = false;
  for (std::size_t i = 0; i < 50; ++i) {
    const ColoredMultigraph g = sample_graph(spec, i);
    const ColoredMultigraph h = complement(g);
    EXPECT_EQ(h.color_count(), g.color_count());
    EXPECT_EQ(g.edge_count() + h.edge_count(),
              static_cast<std::size_t>(g.color_count() * choose2(g.vertex_count())));
    EXPECT_EQ(complement(h), g);
  }
}

TEST(Complement, KeepsColorCountWhenAColorIsUnused) {
  const ColoredMultigraph g = rainbow_complete(4, 3);
  const ColoredMultigraph h = complement(g);
  EXPECT_EQ(h.edge_count(), 0u);
  EXPECT_EQ(h.color_count(), 3);
}

TEST(Complement, OfTwoColorRainbowExtremal) {
  // Blue misses every pair touching the two pendants except their edges to v.
  const ColoredMultigraph h = complement(extremal_2col_rainbow(10).graph);
  EXPECT_EQ(h.edge_count(), 15u);
  EXPECT_EQ(count(h.neighbors(8, 2)), 8);
  EXPECT_EQ(count(h.neighbors(9, 2)), 8);
  EXPECT_EQ(h.neighbors(0, 1), 0u);
}

TEST(Subgraphs, ColorAndIntersection) {
  std::vector<Edge> e{{0, 1, 1}, {0, 1, 2}, {1, 2, 2}, {0, 2, 3}};
  const ColoredMultigraph g(3, 3, e);
  const ColoredMultigraph blue = color_subgraph(g, 2);
  EXPECT_EQ(blue.color_count(), 1);
  EXPECT_EQ(blue.edge_count(), 2u);
  const ColoredMultigraph both = parallel_intersection(g, 1, 2);
  EXPECT_EQ(both.edge_count(), 1u);
  EXPECT_TRUE(both.has_edge(0, 1, 1));
  EXPECT_THROW(color_subgraph(g, 4), InputError);
}

TEST(Subgraphs, InducedRelabelsAndMapsBack) {
  const ColoredMultigraph g = rainbow_complete(6, 2);
  const InducedSubgraph sub = induced_subgraph(g, bit(1) | bit(3) | bit(4) | bit(5));
  EXPECT_EQ(sub.graph.vertex_count(), 4);
  EXPECT_EQ(sub.original, (std::vector<Vertex>{1, 3, 4, 5}));
  const CycleCertificate c{{0, 1, 2, 3}, {1, 2, 1, 2}};
  const CycleCertificate back = to_original(sub, c);
  EXPECT_EQ(back.vertices, (std::vector<Vertex>{1, 3, 4, 5}));
  EXPECT_TRUE(verify_proper_cycle(g, back).ok());
}

TEST(Merge, RenumbersAndDropsDuplicates) {
  std::vector<Edge> e{{0, 1, 1}, {0, 1, 3}, {1, 2, 2}, {2, 3, 3}, {0, 3, 4}};
  const ColoredMultigraph g(4, 4, e);
  const auto [h, rec] = merge_colors(g, 3, 1);
  EXPECT_EQ(h.color_count(), 3);
  EXPECT_EQ(h.edge_count(), 4u);
  EXPECT_EQ(rec.dropped_duplicates,
            (std::vector<std::pair<Vertex, Vertex>>{{0, 1}}));
  EXPECT_EQ(rec.renumber[1], 1);
  EXPECT_EQ(rec.renumber[2], 2);
  EXPECT_EQ(rec.renumber[3], 1);
  EXPECT_EQ(rec.renumber[4], 3);
  EXPECT_TRUE(h.has_edge(2, 3, 1));
  EXPECT_TRUE(h.has_edge(0, 3, 3));
}

TEST(Merge, Preconditions) {
  const ColoredMultigraph g = rainbow_complete(4, 3);
  EXPECT_THROW(merge_colors(g, 2, 2), InputError);
  EXPECT_THROW(merge_colors(g, 0, 1), InputError);
  EXPECT_THROW(merge_colors(rainbow_complete(4, 2), 1, 2), InputError);
}

TEST(Contract, TripleInheritsPerColor) {
  const ColoredMultigraph g = rainbow_complete(6, 2);
  ContractionRule rule = ContractionRule::uniform(2, Inherit::none);
  rule.set(1, Inherit::from_a).set(2, Inherit::from_b);
  const Contraction ct = contract(g, 0, 1, 2, rule);
  EXPECT_EQ(ct.graph.vertex_count(), 4);
  EXPECT_EQ(ct.merged, 3);
  EXPECT_EQ(ct.original, (std::vector<Vertex>{3, 4, 5, -1}));
  EXPECT_EQ(count(ct.graph.neighbors(ct.merged, 1)), 3);
  EXPECT_EQ(ct.removed_edges, g.edge_count() - ct.graph.edge_count());
  EXPECT_FALSE(ct.is_pair());
}

TEST(Contract, IntersectionAndNone) {
  std::vector<Edge> e{{1, 3, 1}, {2, 3, 1}, {1, 4, 1}, {0, 1, 2}, {0, 2, 1}};
  const ColoredMultigraph g(5, 2, e);
  ContractionRule rule = ContractionRule::uniform(2, Inherit::none);
  rule.set(1, Inherit::intersection);
  const Contraction ct = contract(g, 0, 1, 2, rule);
  // Only vertex 3 is a color-1 neighbor of both 1 and 2.
  EXPECT_EQ(ct.graph.neighbors(ct.merged, 1), bit(0));
  EXPECT_EQ(ct.graph.neighbors(ct.merged, 2), 0u);
}

TEST(Contract, PairWhenCenterIsA) {
  const ColoredMultigraph g = rainbow_complete(5, 3);
  const Contraction ct = contract(g, 1, 1, 3, ContractionRule::uniform(3, Inherit::from_a));
  EXPECT_TRUE(ct.is_pair());
  EXPECT_EQ(ct.graph.vertex_count(), 4);
  EXPECT_THROW(contract(g, 1, 3, 3, ContractionRule::uniform(3, Inherit::none)),
               InputError);
  EXPECT_THROW(contract(g, 1, 2, 1, ContractionRule::uniform(3, Inherit::none)),
               InputError);
  EXPECT_THROW(contract(g, 0, 1, 2, ContractionRule::uniform(2, Inherit::none)),
               InputError);
}

TEST(Contract, LiftThroughExpandsTheMergedVertex) {
  // Any proper Hamiltonian cycle of the contracted rainbow complete graph
  // lifts back, because every inner edge has every color.
  const ColoredMultigraph g = rainbow_complete(7, 3);
  ContractionRule rule = ContractionRule::uniform(3, Inherit::intersection);
  const Contraction ct = contract(g, 2, 4, 6, rule);
  const SolveOutcome sub = find_proper_ham_cycle(ct.graph);
  ASSERT_TRUE(sub.found());
  const auto lifted = lift_through(ct, g, *sub.cycle);
  ASSERT_TRUE(lifted.has_value());
  EXPECT_EQ(lifted->length(), 7u);
  EXPECT_TRUE(verify_proper_cycle(g, *lifted).ok());
}

TEST(Contract, LiftWithoutMergedVertexOnlyRelabels) {
  const ColoredMultigraph g = rainbow_complete(7, 2);
  const Contraction ct = contract(g, 0, 1, 2, ContractionRule::uniform(2, Inherit::from_a));
  const CycleCertificate c{{0, 1, 2, 3}, {1, 2, 1, 2}};
  const auto lifted = lift_through(ct, g, c);
  ASSERT_TRUE(lifted.has_value());
  EXPECT_EQ(lifted->vertices, (std::vector<Vertex>{3, 4, 5, 6}));
}

TEST(Contract, LiftFailsWhenNoExpansionIsProper) {
  // Path 3 - 0 - 1 - 2 - 3 in a single color cannot be made proper.
  std::vector<Edge> e{{0, 1, 1}, {1, 2, 1}, {0, 3, 1}, {2, 3, 1}, {0, 2, 2}};
  const ColoredMultigraph g(4, 2, e);
  ContractionRule rule = ContractionRule::uniform(2, Inherit::none);
  rule.set(1, Inherit::from_a);
  const Contraction ct = contract(g, 1, 0, 2, rule);
  // Contracted graph: vertex 3 and the merged vertex, joined in color 1.
  const CycleCertificate fake{{0, 1}, {1, 1}};
  EXPECT_FALSE(lift_through(ct, g, fake).has_value());
}
