#include <gtest/gtest.h>

#include "fockmodes/fixtures.hpp"
#include "fockmodes/random.hpp"
#include "fockmodes/unitary_io.hpp"

namespace fockmodes {
namespace {

TEST(UnitaryFile, Identity) {
  const auto u = parse_unitary_file(R"({"dim": 2, "rows": [[[1,0],[0,0]], [[0,0],[1,0]]]})");
  EXPECT_EQ(u.dim(), 2);
  EXPECT_TRUE(u.matrix().isApprox(ComplexMatrix::Identity(2, 2)));
}

TEST(UnitaryFile, BalancedSplitterMatchesFixture) {
  const auto u = parse_unitary_file(
      R"({"dim": 2, "rows": [[[0.7071067811865476,0],[0.7071067811865476,0]],
                              [[0.7071067811865476,0],[-0.7071067811865476,0]]]})");
  EXPECT_LT((u.matrix() - fixtures::balanced_splitter().matrix()).norm(), 1e-15);
}

TEST(UnitaryFile, RoundTrip) {
  random::Engine rng(3);
  for (int m = 1; m <= 5; ++m) {
    const auto u = random::unitary(rng, m);
    const auto back = parse_unitary_file(format_unitary_file(u));
    EXPECT_EQ((u.matrix() - back.matrix()).norm(), 0.0);
  }
}

TEST(UnitaryFile, ShapeErrors) {
  EXPECT_THROW(parse_unitary_file(R"({"dim": 2, "rows": [[[1,0]], [[0,0],[1,0]]]})"), DimensionError);
  EXPECT_THROW(parse_unitary_file(R"({"dim": 2, "rows": [[[1,0],[0,0]]]})"), DimensionError);
  EXPECT_THROW(parse_unitary_file(R"({"dim": 1, "rows": [[[1]]]})"), DimensionError);
  EXPECT_THROW(parse_unitary_file(R"({"dim": 0, "rows": []})"), DimensionError);
}

TEST(UnitaryFile, MalformedDocument) {
  try {
    parse_unitary_file(R"({"dim": 2, "rows": [)");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_GT(e.offset(), 0u);
  }
  EXPECT_THROW(parse_unitary_file(R"([1, 2])"), ParseError);
}

TEST(UnitaryFile, NotUnitary) {
  EXPECT_THROW(parse_unitary_file(R"({"dim": 2, "rows": [[[1,0],[1,0]], [[0,0],[1,0]]]})"), NotUnitaryError);
  // within the file tolerance
  EXPECT_NO_THROW(parse_unitary_file(R"({"dim": 1, "rows": [[[1.000000001,0]]]})"));
}

}  // namespace
}  // namespace fockmodes
