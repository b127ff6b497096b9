#include <gtest/gtest.h>

#include <vector>

#include "phc/certificate.hpp"
#include "phc/extremal.hpp"

using namespace phc;

namespace {

// 4-cycle 0-1-2-3 alternating red/blue, plus a red chord 0-2.
ColoredMultigraph square() {
  std::vector<Edge> e{{0, 1, 1}, {1, 2, 2}, {2, 3, 1}, {0, 3, 2}, {0, 2, 1}};
  return ColoredMultigraph(4, 2, e);
}

}  // namespace

TEST(Certificate, AcceptsProperCycle) {
  const Verdict v = verify_proper_cycle(square(), {{0, 1, 2, 3}, {1, 2, 1, 2}});
  EXPECT_TRUE(v.ok());
  EXPECT_EQ(v.reason(), "ok");
}

TEST(Certificate, Defects) {
  const ColoredMultigraph g = square();
  EXPECT_EQ(verify_proper_cycle(g, {{0, 1}, {1, 1}}).defect, Defect::too_short);
  EXPECT_EQ(verify_proper_cycle(g, {{0, 1, 2, 3}, {1, 2, 1}}).defect,
            Defect::size_mismatch);
  EXPECT_EQ(verify_proper_cycle(g, {{0, 1, 2, 7}, {1, 2, 1, 2}}).defect,
            Defect::vertex_out_of_range);
  EXPECT_EQ(verify_proper_cycle(g, {{0, 1, 0, 3}, {1, 2, 1, 2}}).defect,
            Defect::repeated_vertex);
  EXPECT_EQ(verify_proper_cycle(g, {{0, 1, 2, 3}, {1, 2, 3, 2}}).defect,
            Defect::color_out_of_range);
  EXPECT_EQ(verify_proper_cycle(g, {{0, 1, 3, 2}, {1, 2, 1, 2}}).defect,
            Defect::missing_edge);
}

TEST(Certificate, EqualAdjacentColorsLocated) {
  const ColoredMultigraph g = square();
  // 0-1 red, 1-2 blue, 2-0 red: the red pair meets at vertex 0 across the
  // wraparound.
  const Verdict v = verify_proper_cycle(g, {{0, 1, 2}, {1, 2, 1}});
  EXPECT_EQ(v.defect, Defect::adjacent_equal_colors);
  ASSERT_TRUE(v.index.has_value());
  EXPECT_EQ(*v.index, 2u);
  EXPECT_TRUE(verify_cycle_edges(g, {{0, 1, 2}, {1, 2, 1}}).ok());
}

TEST(Certificate, Paths) {
  const ColoredMultigraph g = square();
  EXPECT_TRUE(verify_proper_path(g, {{3}, {}}).ok());
  EXPECT_TRUE(verify_proper_path(g, {{0, 1, 2, 3}, {1, 2, 1}}).ok());
  EXPECT_EQ(verify_proper_path(g, {{}, {}}).defect, Defect::too_short);
  EXPECT_EQ(verify_proper_path(g, {{1, 0, 2}, {1, 1}}).defect,
            Defect::adjacent_equal_colors);
}

TEST(Certificate, OddProperCycleImpossibleWithTwoColors) {
  // Every 3-cycle of the rainbow complete two-colored K3 repeats a color.
  const ColoredMultigraph g = rainbow_complete(3, 2);
  for (Color a = 1; a <= 2; ++a) {
    for (Color b = 1; b <= 2; ++b) {
      for (Color c = 1; c <= 2; ++c) {
        EXPECT_FALSE(verify_proper_cycle(g, {{0, 1, 2}, {a, b, c}}).ok());
      }
    }
  }
}
