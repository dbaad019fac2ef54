#include <gtest/gtest.h>

#include "chamberlab/building_block.hpp"
#include "chamberlab/error.hpp"
#include "chamberlab/geometry.hpp"

namespace cl = chamberlab;

namespace {

const cl::CoxeterGroup& c3() {
  static const std::array<cl::Generator, 3> gens{1, 2, 3};
  static const auto w = cl::build_group(cl::CoxeterMatrix::f4().submatrix(gens));
  return w;
}

}  // namespace

TEST(BuildingBlock, Sp6) {
  const auto r = cl::verify_building_block(cl::build_sp6_polar(), c3());
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(r.points, 63u);
  EXPECT_EQ(r.chambers, 2835u);
  EXPECT_EQ(r.ordered_opposite_pairs, 63u * 32u);
  EXPECT_EQ(r.min_opposite_per_point, 32u);
  EXPECT_EQ(r.max_opposite_per_point, 32u);
  EXPECT_EQ(r.min_chambers_per_point, 45u);
  EXPECT_EQ(r.max_chambers_per_point, 45u);
  EXPECT_EQ(r.chamber_checks, 63u * 32u * 45u);
  EXPECT_EQ(r.failures, 0u);
  EXPECT_EQ(r.observed_word, cl::parse_word("1,2,3,2,1"));
  EXPECT_LT(r.collinear_max_distance, 5);
}

TEST(BuildingBlock, Octahedron) {
  const auto r = cl::verify_building_block(cl::thin_octahedron(c3()), c3());
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(r.points, 6u);
  EXPECT_EQ(r.chambers, 48u);
  EXPECT_EQ(r.ordered_opposite_pairs, 6u);
  EXPECT_EQ(r.chamber_checks, 6u * 8u);
}

TEST(BuildingBlock, RejectsWrongInputs) {
  const auto f4 = cl::build_group(cl::CoxeterMatrix::f4());
  EXPECT_THROW(cl::verify_building_block(cl::build_sp6_polar(), f4), cl::Error);
  EXPECT_THROW(cl::verify_building_block(cl::build_w2(), c3()), cl::Error);
}

TEST(AlternatingWords, AllBlockCounts) {
  const auto f4 = cl::build_group(cl::CoxeterMatrix::f4());
  for (int k = 1; k <= 4; ++k) {
    const auto r = cl::verify_alternating_words(f4, k);
    EXPECT_TRUE(r.pass);
    ASSERT_EQ(r.words.size(), 2u);
    for (const auto& w : r.words) {
      EXPECT_TRUE(w.reduced);
      EXPECT_EQ(w.length, 5 * k);
      EXPECT_EQ(cl::reduce(f4, w.word).length, 5 * k);
    }
  }
  const auto k1 = cl::verify_alternating_words(f4, 1);
  EXPECT_EQ(k1.words[0].word, cl::parse_word("1,2,3,2,1"));
  EXPECT_EQ(k1.words[1].word, cl::parse_word("4,3,2,3,4"));
  EXPECT_THROW(cl::verify_alternating_words(f4, 0), cl::Error);
  EXPECT_THROW(cl::verify_alternating_words(f4, 5), cl::Error);
  EXPECT_THROW(cl::verify_alternating_words(c3(), 1), cl::Error);
}
