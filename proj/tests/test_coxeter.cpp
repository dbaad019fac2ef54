#include <gtest/gtest.h>

#include <array>
#include <map>
#include <random>
#include <set>

#include "chamberlab/coxeter.hpp"
#include "chamberlab/error.hpp"

namespace cl = chamberlab;

namespace {

// Independent F4 model: the Weyl group acting on its 48 roots, coordinates
// doubled so that every root and reflection is integral.
using Vec = std::array<int, 4>;

int dot(const Vec& a, const Vec& b) {
  int s = 0;
  for (int i = 0; i < 4; ++i) s += a[i] * b[i];
  return s;
}

Vec reflect(const Vec& v, const Vec& a) {
  const int k = 2 * dot(v, a) / dot(a, a);
  Vec out = v;
  for (int i = 0; i < 4; ++i) out[i] -= k * a[i];
  return out;
}

struct RootOracle {
  std::array<Vec, 4> simple{{{0, 2, -2, 0}, {0, 0, 2, -2}, {0, 0, 0, 2}, {1, -1, -1, -1}}};
  std::vector<Vec> roots;
  std::map<Vec, int> index;
  // Generic dominant-ish vector; its orbit identifies group elements.
  Vec rho{11, 5, 3, 1};

  RootOracle() {
    std::set<Vec> seen(simple.begin(), simple.end());
    std::vector<Vec> frontier(simple.begin(), simple.end());
    while (!frontier.empty()) {
      std::vector<Vec> next;
      for (const auto& v : frontier) {
        for (const auto& a : simple) {
          const Vec r = reflect(v, a);
          if (seen.insert(r).second) next.push_back(r);
        }
      }
      frontier = std::move(next);
    }
    roots.assign(seen.begin(), seen.end());
    for (std::size_t i = 0; i < roots.size(); ++i) index[roots[i]] = static_cast<int>(i);
  }

  // Positive iff it pairs positively with rho (rho is regular).
  bool positive(const Vec& r) const { return dot(r, rho) > 0; }

  // Linear map of a word w = s_{a1} ... s_{ak} applied to v: s_{a1}(...(s_{ak} v)).
  Vec apply(const cl::Word& w, Vec v) const {
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) v = reflect(v, simple[*it - 1]);
    return v;
  }

  // Number of positive roots made negative by the inverse: equals length.
  int length(const cl::Word& w) const {
    int n = 0;
    const cl::Word inv = w.reversed();
    for (const auto& r : roots) {
      if (positive(r) && !positive(apply(inv, r))) ++n;
    }
    return n;
  }

  std::size_t orbit_size() const {
    std::set<Vec> seen{rho};
    std::vector<Vec> frontier{rho};
    while (!frontier.empty()) {
      std::vector<Vec> next;
      for (const auto& v : frontier) {
        for (const auto& a : simple) {
          const Vec r = reflect(v, a);
          if (seen.insert(r).second) next.push_back(r);
        }
      }
      frontier = std::move(next);
    }
    return seen.size();
  }
};

cl::Word random_word(std::mt19937& rng, int rank, int len) {
  std::uniform_int_distribution<int> letter(1, rank);
  cl::Word w;
  for (int i = 0; i < len; ++i) w.letters.push_back(letter(rng));
  return w;
}

// Lexicographically least reduced word by brute force over all words of the
// element's length.
cl::Word brute_force_normal_form(const cl::CoxeterGroup& g, cl::ElementId target) {
  const int len = g.length(target);
  cl::Word w;
  w.letters.assign(len, 1);
  while (true) {
    if (g.evaluate(w) == target) return w;
    int k = len - 1;
    while (k >= 0 && w.letters[k] == g.rank()) w.letters[k--] = 1;
    if (k < 0) break;
    ++w.letters[k];
  }
  ADD_FAILURE() << "no word found";
  return {};
}

}  // namespace

TEST(RootOracle, F4RootSystemShape) {
  RootOracle o;
  EXPECT_EQ(o.roots.size(), 48u);
  int positive = 0;
  for (const auto& r : o.roots) positive += o.positive(r);
  EXPECT_EQ(positive, 24);
  EXPECT_EQ(o.orbit_size(), 1152u);
}

TEST(Coxeter, F4OrderAndLongestMatchOracle) {
  const auto w = cl::build_group(cl::CoxeterMatrix::f4());
  EXPECT_EQ(w.order(), 1152u);
  const auto w0 = cl::longest_element(w);
  EXPECT_EQ(w0.length, 24);
  RootOracle o;
  EXPECT_EQ(o.length(w0.normal_form), 24);
}

TEST(Coxeter, F4LengthsMatchInversionCounts) {
  const auto w = cl::build_group(cl::CoxeterMatrix::f4());
  RootOracle o;
  for (cl::ElementId g = 0; g < w.order(); ++g) {
    ASSERT_EQ(w.length(g), o.length(w.normal_form(g))) << cl::format_word(w.normal_form(g));
  }
}

TEST(Coxeter, F4ElementsAreDistinctInOracle) {
  const auto w = cl::build_group(cl::CoxeterMatrix::f4());
  RootOracle o;
  std::set<Vec> images;
  for (cl::ElementId g = 0; g < w.order(); ++g) images.insert(o.apply(w.normal_form(g), o.rho));
  EXPECT_EQ(images.size(), 1152u);
}

TEST(Coxeter, RandomWordsEvaluateConsistentlyWithOracle) {
  const auto w = cl::build_group(cl::CoxeterMatrix::f4());
  RootOracle o;
  std::mt19937 rng(7);
  for (int trial = 0; trial < 2000; ++trial) {
    const cl::Word word = random_word(rng, 4, 1 + trial % 40);
    const auto g = cl::reduce(w, word);
    EXPECT_EQ(o.apply(word, o.rho), o.apply(g.normal_form, o.rho));
    EXPECT_EQ(g.length, o.length(word));
  }
}

TEST(Coxeter, BraidOrdersEqualMatrix) {
  const auto m = cl::CoxeterMatrix::f4();
  const auto w = cl::build_group(m);
  for (int i = 1; i <= 4; ++i) {
    for (int j = 1; j <= 4; ++j) EXPECT_EQ(cl::braid_order(w, i, j), m(i, j));
  }
}

TEST(Coxeter, SmallGroupOrders) {
  EXPECT_EQ(cl::build_group(cl::CoxeterMatrix::rank_one()).order(), 2u);
  for (int m = 2; m <= 8; ++m) {
    EXPECT_EQ(cl::build_group(cl::CoxeterMatrix::dihedral(m)).order(), static_cast<std::size_t>(2 * m));
  }
  const cl::CoxeterMatrix a3({{1, 3, 2}, {3, 1, 3}, {2, 3, 1}});
  EXPECT_EQ(cl::build_group(a3).order(), 24u);
  const std::array<cl::Generator, 3> gens{1, 2, 3};
  EXPECT_EQ(cl::build_group(cl::CoxeterMatrix::f4().submatrix(gens)).order(), 48u);
  const cl::CoxeterMatrix g2({{1, 6}, {6, 1}});
  EXPECT_EQ(cl::build_group(g2).order(), 12u);
}

TEST(Coxeter, NonCrystallographicFallback) {
  const cl::CoxeterMatrix h3({{1, 5, 2}, {5, 1, 3}, {2, 3, 1}});
  EXPECT_FALSE(h3.is_crystallographic());
  const auto w = cl::build_group(h3);
  EXPECT_EQ(w.order(), 120u);
  EXPECT_EQ(cl::longest_element(w).length, 15);
  EXPECT_EQ(cl::build_group(cl::CoxeterMatrix::dihedral(5)).order(), 10u);
}

TEST(Coxeter, InfiniteGroupsHitTheCap) {
  const cl::CoxeterMatrix affine_a2({{1, 3, 3}, {3, 1, 3}, {3, 3, 1}});
  try {
    cl::build_group(affine_a2, 500);
    FAIL();
  } catch (const cl::Error& e) {
    EXPECT_EQ(e.code(), cl::ErrorCode::kCapExceeded);
  }
  EXPECT_THROW(cl::build_group(cl::CoxeterMatrix::dihedral(cl::CoxeterMatrix::kInfinity), 100), cl::Error);
  const cl::CoxeterMatrix h4({{1, 5, 2, 2}, {5, 1, 3, 2}, {2, 3, 1, 3}, {2, 2, 3, 1}});
  EXPECT_THROW(cl::build_group(h4, 1000), cl::Error);
}

TEST(Coxeter, InvalidMatrices) {
  auto code = [](std::vector<std::vector<int>> e) {
    try {
      cl::CoxeterMatrix m(std::move(e));
    } catch (const cl::Error& err) {
      return err.code();
    }
    return cl::ErrorCode::kParse;
  };
  EXPECT_EQ(code({{1, 3}, {2, 1}}), cl::ErrorCode::kInvalidMatrix);
  EXPECT_EQ(code({{2, 3}, {3, 1}}), cl::ErrorCode::kInvalidMatrix);
  EXPECT_EQ(code({{1, 1}, {1, 1}}), cl::ErrorCode::kInvalidMatrix);
  EXPECT_EQ(code({{1, 3, 2}, {3, 1}}), cl::ErrorCode::kInvalidMatrix);
}

TEST(Coxeter, ReduceAndLetters) {
  const auto w = cl::build_group(cl::CoxeterMatrix::f4());
  const auto e = cl::reduce(w, cl::parse_word("1,1"));
  EXPECT_EQ(e.id, 0u);
  EXPECT_EQ(e.length, 0);
  EXPECT_TRUE(e.normal_form.empty());
  EXPECT_TRUE(cl::is_reduced(w, cl::parse_word("1,2,3,2,1")));
  EXPECT_FALSE(cl::is_reduced(w, cl::parse_word("2,3,2,3,2,3,2,3")));
  try {
    cl::reduce(w, cl::parse_word("1,5"));
    FAIL();
  } catch (const cl::Error& err) {
    EXPECT_EQ(err.code(), cl::ErrorCode::kLetterOutOfRange);
  }
  EXPECT_THROW(cl::reduce(w, cl::parse_word("0")), cl::Error);
  // s2 s3 s2 s3 = s3 s2 s3 s2; the lex-least form is the former.
  EXPECT_EQ(cl::format_word(cl::reduce(w, cl::parse_word("3,2,3,2")).normal_form), "2,3,2,3");
}

TEST(Coxeter, NormalFormsAreLexLeastReducedWords) {
  const std::array<cl::Generator, 3> gens{1, 2, 3};
  const auto b3 = cl::build_group(cl::CoxeterMatrix::f4().submatrix(gens));
  for (cl::ElementId g = 0; g < b3.order(); ++g) {
    EXPECT_EQ(b3.normal_form(g), brute_force_normal_form(b3, g));
    EXPECT_EQ(b3.normal_form(g), cl::greedy_normal_form(b3, g));
  }
  const auto f4 = cl::build_group(cl::CoxeterMatrix::f4());
  for (cl::ElementId g = 0; g < f4.order(); g += 7) {
    if (f4.length(g) > 7) break;
    EXPECT_EQ(f4.normal_form(g), brute_force_normal_form(f4, g));
  }
  for (cl::ElementId g = 0; g < f4.order(); ++g) {
    EXPECT_EQ(f4.normal_form(g), cl::greedy_normal_form(f4, g));
  }
}

TEST(Coxeter, IdsAreShortLexOrdered) {
  const auto w = cl::build_group(cl::CoxeterMatrix::f4());
  for (cl::ElementId g = 1; g < w.order(); ++g) {
    const auto& a = w.normal_form(g - 1);
    const auto& b = w.normal_form(g);
    EXPECT_TRUE(a.size() < b.size() || (a.size() == b.size() && a < b));
  }
}

TEST(Coxeter, GroupAxioms) {
  const auto w = cl::build_group(cl::CoxeterMatrix::f4());
  std::mt19937 rng(11);
  std::uniform_int_distribution<cl::ElementId> pick(0, static_cast<cl::ElementId>(w.order() - 1));
  for (int t = 0; t < 3000; ++t) {
    const auto a = pick(rng), b = pick(rng), c = pick(rng);
    EXPECT_EQ(w.multiply(w.multiply(a, b), c), w.multiply(a, w.multiply(b, c)));
    EXPECT_EQ(w.multiply(a, w.inverse(a)), 0u);
    EXPECT_EQ(w.length(w.inverse(a)), w.length(a));
    const int s = 1 + t % 4;
    EXPECT_EQ(w.left(s, a), w.evaluate(cl::Word{{s}} + w.normal_form(a)));
    EXPECT_EQ(w.right(a, s), w.evaluate(w.normal_form(a) + cl::Word{{s}}));
    const auto ga = w.element(a), gb = w.element(b);
    EXPECT_EQ(cl::multiply(w, ga, gb).id, w.multiply(a, b));
  }
}

TEST(Coxeter, Descents) {
  const auto w = cl::build_group(cl::CoxeterMatrix::f4());
  const auto w0 = cl::longest_element(w);
  EXPECT_EQ(cl::descents(w, w0.id, cl::Side::kLeft), cl::GeneratorSubset::all(4));
  EXPECT_EQ(cl::descents(w, w0.id, cl::Side::kRight), cl::GeneratorSubset::all(4));
  EXPECT_TRUE(cl::descents(w, 0, cl::Side::kLeft).empty());
  const auto g = cl::reduce(w, cl::parse_word("1,2,3,2,1"));
  EXPECT_EQ(cl::descents(w, g.id, cl::Side::kLeft), cl::GeneratorSubset({1}));
  EXPECT_EQ(cl::descents(w, g.id, cl::Side::kRight), cl::GeneratorSubset({1}));
  for (cl::ElementId x = 0; x < w.order(); ++x) {
    for (int s = 1; s <= 4; ++s) {
      const bool right_descent = w.length(w.right(x, s)) < w.length(x);
      EXPECT_EQ(cl::descents(w, x, cl::Side::kRight).contains(s), right_descent);
    }
  }
}

TEST(Coxeter, LongestElementUniqueAndInvolution) {
  const auto w = cl::build_group(cl::CoxeterMatrix::f4());
  const auto w0 = cl::longest_element(w);
  int count = 0;
  for (cl::ElementId g = 0; g < w.order(); ++g) count += w.length(g) == 24;
  EXPECT_EQ(count, 1);
  EXPECT_EQ(w.inverse(w0.id), w0.id);
}

TEST(Coxeter, WordAndSubsetFormats) {
  EXPECT_EQ(cl::format_word(cl::parse_word("1,2,3")), "1,2,3");
  EXPECT_TRUE(cl::parse_word("").empty());
  EXPECT_THROW(cl::parse_word("1,x"), cl::Error);
  EXPECT_EQ(cl::format_subset(cl::parse_subset("{2,3,4}")), "{2,3,4}");
  EXPECT_EQ(cl::parse_subset("4,2,3"), cl::GeneratorSubset({2, 3, 4}));
  EXPECT_TRUE(cl::parse_subset("-").empty());
  EXPECT_TRUE(cl::parse_subset("").empty());
  EXPECT_EQ(cl::format_subset({}), "{}");
  EXPECT_THROW(cl::GeneratorSubset({5}).check_rank(4), cl::Error);
}

TEST(Coxeter, SubmatrixRenumbers) {
  const std::array<cl::Generator, 2> gens{3, 2};
  const auto m = cl::CoxeterMatrix::f4().submatrix(gens);
  EXPECT_EQ(m.rank(), 2);
  EXPECT_EQ(m(1, 2), 4);
}
