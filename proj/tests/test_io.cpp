#include <gtest/gtest.h>

#include "chamberlab/error.hpp"
#include "chamberlab/io.hpp"
#include "chamberlab/parabolic.hpp"

namespace cl = chamberlab;

TEST(Io, MatrixJson) {
  const auto m = cl::parse_matrix_json("[[1,3,2,2],[3,1,4,2],[2,4,1,3],[2,2,3,1]]");
  EXPECT_EQ(m, cl::CoxeterMatrix::f4());
  const auto inf = cl::parse_matrix_json("[[1,0],[0,1]]");
  EXPECT_EQ(inf(1, 2), cl::CoxeterMatrix::kInfinity);
  for (const char* bad : {"", "[[1,3],[3]]", "{\"a\":1}", "[[1,\"x\"],[3,1]]", "[[1,3],[2,1]]"}) {
    EXPECT_THROW(cl::parse_matrix_json(bad), cl::Error) << bad;
  }
}

TEST(Io, ClaimsRoundTrip) {
  const auto claims = cl::shipped_lemma_claims();
  const auto parsed = cl::parse_claims_json(cl::claims_to_json(claims));
  ASSERT_EQ(parsed.size(), claims.size());
  for (std::size_t i = 0; i < claims.size(); ++i) {
    EXPECT_EQ(parsed[i].left, claims[i].left);
    EXPECT_EQ(parsed[i].word, claims[i].word);
    EXPECT_EQ(parsed[i].right, claims[i].right);
  }
  const auto one = cl::parse_claims_json(R"([{"left":[2,3,4],"word":[1,2,3,2,1],"right":[2,3,4]}])");
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one[0].word, cl::parse_word("1,2,3,2,1"));
  try {
    cl::parse_claims_json(R"([{"left":[2],"word":"oops"}])");
    FAIL();
  } catch (const cl::Error& e) {
    EXPECT_EQ(e.code(), cl::ErrorCode::kParse);
  }
}

TEST(Io, MissingFile) {
  EXPECT_THROW(cl::read_file("/nonexistent/file.json"), cl::Error);
}
