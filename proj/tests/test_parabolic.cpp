#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "chamberlab/coxeter.hpp"
#include "chamberlab/error.hpp"
#include "chamberlab/parabolic.hpp"

namespace cl = chamberlab;

namespace {

const cl::CoxeterGroup& f4() {
  static const cl::CoxeterGroup w = cl::build_group(cl::CoxeterMatrix::f4());
  return w;
}

// Oracle: W_J as the closure of {e} under right multiplication by J, and the
// double coset as the literal product set.
std::vector<cl::ElementId> closure(const cl::CoxeterGroup& w, const cl::GeneratorSubset& J) {
  std::set<cl::ElementId> seen{0};
  std::vector<cl::ElementId> frontier{0};
  while (!frontier.empty()) {
    std::vector<cl::ElementId> next;
    for (auto g : frontier) {
      for (auto s : J.indices()) {
        if (seen.insert(w.right(g, s)).second) next.push_back(w.right(g, s));
      }
    }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

std::set<cl::ElementId> product_set(const cl::CoxeterGroup& w, const cl::GeneratorSubset& I,
                                    cl::ElementId g, const cl::GeneratorSubset& J) {
  std::set<cl::ElementId> out;
  const auto WI = closure(w, I);
  const auto WJ = closure(w, J);
  for (auto u : WI) {
    const auto ug = w.multiply(u, g);
    for (auto v : WJ) out.insert(w.multiply(ug, v));
  }
  return out;
}

const cl::GeneratorSubset k234{2, 3, 4};
const cl::GeneratorSubset k123{1, 2, 3};

}  // namespace

TEST(Parabolic, Orders) {
  EXPECT_EQ(cl::parabolic_elements(f4(), k234).size(), 48u);
  EXPECT_EQ(cl::parabolic_elements(f4(), k123).size(), 48u);
  EXPECT_EQ(cl::parabolic_elements(f4(), {1, 3, 4}).size(), 12u);
  EXPECT_EQ(cl::parabolic_elements(f4(), {1, 2, 4}).size(), 12u);
  EXPECT_EQ(cl::parabolic_elements(f4(), {}).size(), 1u);
  EXPECT_EQ(cl::parabolic_elements(f4(), cl::GeneratorSubset::all(4)).size(), 1152u);
  const auto ids = cl::parabolic_elements(f4(), {2, 3});
  const auto oracle = closure(f4(), {2, 3});
  EXPECT_EQ(ids, oracle);
}

TEST(Parabolic, DoubleCosetMatchesProductSet) {
  for (cl::ElementId g = 0; g < f4().order(); g += 37) {
    for (const auto& [I, J] : {std::pair{k234, k123}, std::pair{k234, k234}, std::pair{k123, k123},
                               std::pair{cl::GeneratorSubset{1}, cl::GeneratorSubset{4}}}) {
      const auto ids = cl::double_coset(f4(), I, g, J);
      const auto oracle = product_set(f4(), I, g, J);
      ASSERT_EQ(std::set<cl::ElementId>(ids.begin(), ids.end()), oracle);
      const auto rep = cl::min_double_coset_rep(f4(), I, f4().element(g), J);
      const auto shortest = *std::min_element(oracle.begin(), oracle.end(), [&](auto a, auto b) {
        return f4().length(a) < f4().length(b);
      });
      EXPECT_EQ(rep.length, f4().length(shortest));
      std::size_t minimal = 0;
      for (auto x : oracle) minimal += f4().length(x) == rep.length;
      EXPECT_EQ(minimal, 1u);
      EXPECT_TRUE(oracle.count(rep.id));
    }
  }
}

TEST(Parabolic, PartitionCounts) {
  struct Case {
    cl::GeneratorSubset I, J;
    std::size_t count;
    std::vector<std::size_t> sizes;
  };
  // Sizes are |W_I| |W_J| / |W_I ∩ d W_J d^-1| per coset, from the oracle.
  const std::vector<Case> cases{
      {k234, k234, 5, {48, 384, 288, 384, 48}},
      {k123, k123, 5, {48, 384, 288, 384, 48}},
      {k123, k234, 3, {288, 576, 288}},
      {k234, k123, 3, {288, 576, 288}},
  };
  for (const auto& c : cases) {
    const auto recs = cl::enumerate_double_cosets(f4(), c.I, c.J);
    ASSERT_EQ(recs.size(), c.count);
    std::set<cl::ElementId> all;
    std::vector<std::size_t> sizes;
    for (const auto& r : recs) {
      sizes.push_back(r.member_ids.size());
      all.insert(r.member_ids.begin(), r.member_ids.end());
      const auto oracle = product_set(f4(), c.I, r.min_rep.id, c.J);
      EXPECT_EQ(std::set<cl::ElementId>(r.member_ids.begin(), r.member_ids.end()), oracle);
    }
    EXPECT_EQ(all.size(), 1152u);
    EXPECT_EQ(sizes, c.sizes);
    for (std::size_t i = 1; i < recs.size(); ++i) {
      EXPECT_LE(recs[i - 1].min_rep.length, recs[i].min_rep.length);
    }
  }
}

TEST(Parabolic, PartitionRepresentatives) {
  std::vector<std::string> reps;
  for (const auto& r : cl::enumerate_double_cosets(f4(), k234, k234)) {
    reps.push_back(cl::format_word(r.min_rep.normal_form));
  }
  EXPECT_EQ(reps, (std::vector<std::string>{"", "1", "1,2,3,2,1", "1,2,3,2,4,3,2,1",
                                            "1,2,3,2,1,4,3,2,1,3,2,4,3,2,1"}));
}

TEST(Parabolic, ShippedClaims) {
  const auto claims = cl::shipped_lemma_claims();
  ASSERT_EQ(claims.size(), 8u);
  const auto report = cl::verify_lemma_reps(f4(), claims);
  const std::vector<int> lengths{5, 5, 10, 10, 15, 15, 20, 20};
  for (std::size_t i = 0; i < 8; ++i) {
    const auto& v = report.verdicts[i];
    EXPECT_TRUE(v.reduced);
    EXPECT_EQ(v.element.length, lengths[i]);
    // The oracle's product set agrees with the enumerated coset.
    const auto oracle = product_set(f4(), v.claim.left, v.element.id, v.claim.right);
    EXPECT_EQ(v.coset_size, oracle.size());
  }
  for (std::size_t i = 0; i < 6; ++i) EXPECT_TRUE(report.verdicts[i].pass()) << i;
}

// A minimal rep d of W_I d W_J satisfies l(u d) = l(u) + l(d) for u in W_I,
// so with |I| = 3 and l(w0(W_I)) = 9 no minimal rep can be longer than 15.
// The two length-20 words are reduced but sit in the length-10 cosets.
TEST(Parabolic, LengthTwentyWordsAreNotMinimal) {
  const auto report = cl::verify_lemma_reps(f4(), cl::shipped_lemma_claims());
  EXPECT_FALSE(report.pass);
  // Claim 7 falls into claim 4's coset, claim 8 into claim 3's.
  for (const auto [i, j] : {std::pair{6u, 3u}, std::pair{7u, 2u}}) {
    const auto& v = report.verdicts[i];
    EXPECT_TRUE(v.reduced);
    EXPECT_FALSE(v.greedy_minimal);
    EXPECT_FALSE(v.exhaustive_minimal);
    EXPECT_EQ(v.min_rep.length, 10);
    EXPECT_EQ(v.min_rep.id, report.verdicts[j].element.id);
  }
  for (const auto& [I, J] : {std::pair{k234, k123}, std::pair{k123, k234}, std::pair{k234, k234},
                             std::pair{k123, k123}}) {
    for (const auto& r : cl::enumerate_double_cosets(f4(), I, J)) EXPECT_LE(r.min_rep.length, 15);
  }
}

TEST(Parabolic, FailingClaims) {
  const std::vector<cl::LemmaClaim> claims{{k234, cl::parse_word("2"), k234},
                                           {{}, cl::parse_word("1,1"), {}}};
  const auto report = cl::verify_lemma_reps(f4(), claims);
  EXPECT_FALSE(report.pass);
  EXPECT_TRUE(report.verdicts[0].reduced);
  EXPECT_FALSE(report.verdicts[0].greedy_minimal);
  EXPECT_EQ(report.verdicts[0].min_rep.id, 0u);
  EXPECT_FALSE(report.verdicts[1].reduced);
  EXPECT_THROW(cl::verify_lemma_reps(f4(), {{k234, cl::parse_word("5"), k234}}), cl::Error);
}
