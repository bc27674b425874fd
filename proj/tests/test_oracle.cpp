#include <gtest/gtest.h>

#include "oracles/oracles.hpp"
#include "support.hpp"

using namespace hopfhilbert;
using namespace hopfhilbert::testing;

namespace {

std::size_t dim_of(const Fixture& f, std::size_t n, const OracleConfig& config = {}) {
  return invariant_dim(f.hopf, f.rep, left_integral(f.hopf), n, config);
}

}  // namespace

TEST(CoproductPower, GroupAlgebraIsDiagonal) {
  const auto h = group_algebra(cyclic_group(3));
  const auto t = coproduct_power(h, {q(0), q(2), q(0)}, 3);
  EXPECT_EQ(t.arity, 3u);
  ASSERT_EQ(t.terms.size(), 1u);
  EXPECT_EQ(t.terms.begin()->first, (std::vector<std::size_t>{1, 1, 1}));
  EXPECT_EQ(t.terms.begin()->second, 2);
}

TEST(CoproductPower, DualGroupAlgebraSplitsProducts) {
  // Delta^2(p_0) on Z/3 is the sum of p_a (x) p_b (x) p_c over a + b + c = 0
  const auto h = dual_group_algebra(cyclic_group(3));
  const auto t = coproduct_power(h, {q(1), q(0), q(0)}, 3);
  EXPECT_EQ(t.terms.size(), 9u);
  for (const auto& [idx, c] : t.terms) {
    EXPECT_EQ((idx[0] + idx[1] + idx[2]) % 3, 0u);
    EXPECT_EQ(c, 1);
  }
}

TEST(CoproductPower, ArityOneIsIdentity) {
  const Fixture kp = load_fixture(fixture("kac_paljutkin.json"));
  Vector v(8, Rational(0));
  v[4] = q(3, 2);
  const auto t = coproduct_power(kp.hopf, v, 1);
  ASSERT_EQ(t.terms.size(), 1u);
  EXPECT_EQ(t.terms.begin()->second, q(3, 2));
}

TEST(CoproductPower, TermCap) {
  const auto h = dual_group_algebra(cyclic_group(4));
  try {
    coproduct_power(h, left_integral(h).coeffs, 6, 100);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::CapExceeded);
  }
}

TEST(InvariantDim, Examples) {
  const Fixture sign = load_fixture(fixture("z2_sign.json"));
  EXPECT_EQ(dim_of(sign, 0), 1u);
  EXPECT_EQ(dim_of(sign, 1), 0u);
  EXPECT_EQ(dim_of(sign, 2), 1u);
  EXPECT_EQ(dim_of(sign, 3), 0u);

  const Fixture trivial = load_fixture(fixture("trivial_d3.json"));
  EXPECT_EQ(dim_of(trivial, 1), 3u);
  EXPECT_EQ(dim_of(trivial, 2), 9u);
  EXPECT_EQ(dim_of(trivial, 4), 81u);

  const Fixture s3 = load_fixture(fixture("s3_perm.json"));
  EXPECT_EQ(dim_of(s3, 1), 1u);
  EXPECT_EQ(dim_of(s3, 2), 2u);
  EXPECT_EQ(dim_of(s3, 3), 5u);
}

TEST(InvariantDim, KacPaljutkin) {
  const Fixture kp = load_fixture(fixture("kac_paljutkin.json"));
  EXPECT_EQ(dim_of(kp, 1), 0u);
  EXPECT_EQ(dim_of(kp, 2), 1u);
  EXPECT_EQ(dim_of(kp, 3), 0u);
  EXPECT_EQ(dim_of(kp, 4), 4u);
}

TEST(InvariantDim, CapExceeded) {
  const Fixture trivial = load_fixture(fixture("trivial_d3.json"));
  OracleConfig config;
  config.cap = 26;
  EXPECT_EQ(dim_of(trivial, 2, config), 9u);
  try {
    dim_of(trivial, 3, config);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::CapExceeded);
  }
}

TEST(InvariantDim, RejectsNonIdempotentElement) {
  const Fixture swap = load_fixture(fixture("z2_swap.json"));
  // 1 + g is an integral with eps = 2, so rho(1 + g) squares to twice itself
  const LeftIntegral doubled{{q(1), q(1)}};
  try {
    invariant_dim(swap.hopf, swap.rep, doubled, 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotIdempotent);
  }
}

TEST(TensorPowerAction, KroneckerOrdering) {
  // First tensor factor is the most significant index.
  const auto h = group_algebra(cyclic_group(2));
  Representation rep{2, {Matrix::identity(2), Matrix(2, 2, {q(1), q(2), q(0), q(3)})}};
  const auto action = tensor_power_action(h, rep, LeftIntegral{{q(0), q(1)}}, 2);
  EXPECT_EQ(action.matrix.to_dense(), kronecker(rep.action[1], rep.action[1]));
  const auto zero = tensor_power_action(h, rep, LeftIntegral{{q(1, 2), q(1, 2)}}, 0);
  EXPECT_EQ(zero.matrix.to_dense(), Matrix(1, 1, {q(1)}));
}

TEST(TensorPowerAction, MatchesExplicitExpansion) {
  Random rng(73);
  const Fixture kp = load_fixture(fixture("kac_paljutkin.json"));
  const Fixture sw = load_fixture(fixture("sweedler.json"));
  const std::vector<std::pair<const HopfAlgebraData*, const Representation*>> cases{
      {&kp.hopf, &kp.rep}, {&sw.hopf, &sw.rep}};
  for (const auto& [h, rep] : cases)
    for (int trial = 0; trial < 3; ++trial) {
      // any element, not just an integral
      Vector t;
      for (std::size_t i = 0; i < h->dim; ++i) t.push_back(rng.rational());
      for (std::size_t n = 1; n <= 4; ++n)
        EXPECT_EQ(tensor_power_action(*h, *rep, LeftIntegral{t}, n).matrix.to_dense(),
                  oracle_ref::explicit_tensor_action(*h, *rep, t, n))
            << "n=" << n;
    }
}

TEST(SparseMatrix, RankAgreesWithDense) {
  Random rng(61);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t rows = 1 + rng.index(6), cols = 1 + rng.index(6), inner = 1 + rng.index(5);
    const Matrix m = rng.matrix(rows, inner) * rng.matrix(inner, cols);
    SparseMatrix s(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) s.add(i, j, m(i, j));
    EXPECT_EQ(s.rank(), rank(m));
    if (rows == cols) {
      EXPECT_EQ(s.trace(), trace(m));
    }
    EXPECT_EQ(s.to_dense(), m);
  }
}

TEST(Verify, SwapMatchesToOrderSix) {
  const Fixture f = load_fixture(fixture("z2_swap.json"));
  const auto report = verify(f.hopf, f.rep, 6);
  ASSERT_EQ(report.degrees.size(), 7u);
  const std::vector<std::size_t> expected{1, 1, 2, 4, 8, 16, 32};
  for (std::size_t n = 0; n <= 6; ++n) {
    EXPECT_EQ(report.degrees[n].status, DegreeStatus::Match);
    EXPECT_EQ(report.degrees[n].oracle, expected[n]);
  }
  EXPECT_TRUE(report.passed());
}

TEST(Verify, SkipsDegreesBeyondCap) {
  const Fixture f = load_fixture(fixture("trivial_d3.json"));
  OracleConfig config;
  config.cap = 100;
  const auto report = verify(f.hopf, f.rep, 6, config);
  for (std::size_t n = 0; n <= 6; ++n)
    EXPECT_EQ(report.degrees[n].status, n <= 4 ? DegreeStatus::Match : DegreeStatus::Skipped) << n;
  EXPECT_FALSE(report.degrees[5].oracle.has_value());
  EXPECT_TRUE(report.passed());
}

TEST(Verify, SweedlerIsNotSemisimple) {
  const Fixture f = load_fixture(fixture("sweedler.json"));
  try {
    verify(f.hopf, f.rep, 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotSemisimple);
  }
}

TEST(Verify, ZeroDimensionalModule) {
  const auto h = group_algebra(cyclic_group(3));
  const auto report = verify(h, trivial_representation(h, 0), 5);
  EXPECT_TRUE(report.passed());
  EXPECT_EQ(report.degrees[0].oracle, 1u);
  for (std::size_t n = 1; n <= 5; ++n) EXPECT_EQ(report.degrees[n].oracle, 0u);
}

TEST(Verify, KacPaljutkinLowDegrees) {
  const Fixture f = load_fixture(fixture("kac_paljutkin.json"));
  const auto report = verify(f.hopf, f.rep, 5);
  EXPECT_TRUE(report.passed());
  for (std::size_t n = 0; n <= 5; ++n) EXPECT_EQ(report.degrees[n].status, DegreeStatus::Match) << n;
}

TEST(InvariantDim, MatchesCharacterAverage) {
  Random rng(67);
  for (const auto& g : small_groups()) {
    const auto h = group_algebra(g);
    const auto rep = random_group_representation(g, rng, 3);
    const auto t = left_integral(h);
    std::vector<Rational> chi;
    for (const auto& m : rep.action) chi.push_back(trace(m));
    for (std::size_t n = 0; n <= 3; ++n)
      EXPECT_EQ(Rational(invariant_dim(h, rep, t, n)), oracle_ref::character_average(chi, n)) << n;
  }
}

TEST(InvariantDim, MatchesGradedWordCount) {
  Random rng(71);
  for (const auto& g : small_groups()) {
    const auto h = dual_group_algebra(g);
    const auto t = left_integral(h);
    std::vector<std::size_t> degrees;
    const auto rep = random_grading(g, rng, 1 + rng.index(3), degrees, false);
    for (std::size_t n = 0; n <= 4; ++n)
      EXPECT_EQ(Integer(invariant_dim(h, rep, t, n)), oracle_ref::graded_word_count(g, check_group(g), degrees, n));
  }
}
