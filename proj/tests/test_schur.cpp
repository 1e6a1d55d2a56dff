#include <gtest/gtest.h>

#include "qschubert/schur.hpp"
#include "test_util.hpp"

using namespace qschubert;
using qschubert::testing::random_rational;

namespace {

RationalSequence random_sequence(std::mt19937_64& rng, std::size_t length) {
  std::vector<Rational> values;
  for (std::size_t i = 0; i < length; ++i) values.push_back(random_rational(rng, -5, 5));
  return RationalSequence(values);
}

// All monomials in c_1..c_m of weighted degree `degree`, as exponent vectors.
void monomials(int m, int degree, int from, std::vector<int>& exps, std::vector<std::vector<int>>& out) {
  if (degree == 0) {
    out.push_back(exps);
    return;
  }
  for (int p = from; p <= m; ++p) {
    if (p > degree) break;
    ++exps[static_cast<std::size_t>(p - 1)];
    monomials(m, degree - p, p, exps, out);
    --exps[static_cast<std::size_t>(p - 1)];
  }
}

}  // namespace

TEST(Delta, Examples) {
  EXPECT_EQ(delta(Partition{}, RationalSequence({7, 8})), 1);
  EXPECT_EQ(delta(Partition({2, 1}), RationalSequence({1, 1, 1, 1})), 0);
  EXPECT_EQ(delta(Partition({1, 1}), RationalSequence({2, 3})), 1);
}

TEST(DualSequence, Examples) {
  EXPECT_EQ(dual_sequence(RationalSequence({0, 0, 0}), 3), RationalSequence({0, 0, 0}));
  EXPECT_EQ(dual_sequence(RationalSequence({2, 3}), 2), RationalSequence({2, 1}));
  EXPECT_EQ(dual_sequence(RationalSequence({1, 1, 1}), 3), RationalSequence({1, 0, 0}));
}

TEST(DualSequence, RecursionMatchesColumnDeterminant) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const RationalSequence h = random_sequence(rng, 8);
    const RationalSequence e = dual_sequence(h, 8);
    for (int p = 0; p <= 8; ++p) {
      std::vector<int> column(static_cast<std::size_t>(p), 1);
      ASSERT_EQ(e[p], delta(Partition(column), h)) << "p=" << p;
    }
  }
}

TEST(DualSequence, Involution) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 100; ++trial) {
    const RationalSequence h = random_sequence(rng, 10);
    ASSERT_EQ(dual_sequence(dual_sequence(h, 10), 10), h);
  }
}

TEST(Delta, VerticalStripRule) {
  std::mt19937_64 rng(2024);
  std::vector<Partition> lambdas;
  for (int w = 0; w <= 6; ++w)
    for (const auto& lambda : partitions_of(w)) lambdas.push_back(lambda);
  for (int trial = 0; trial < 200; ++trial) {
    const RationalSequence h = random_sequence(rng, 10);
    const RationalSequence e = dual_sequence(h, 4);
    for (const auto& lambda : lambdas) {
      const Rational base = delta(lambda, h);
      for (int p = 0; p <= 4; ++p) {
        Rational sum = 0;
        for (const auto& mu : add_vertical_strips(lambda, p, static_cast<int>(lambda.length()) + p)) sum += delta(mu, h);
        ASSERT_EQ(e[p] * base, sum) << to_string(lambda) << " p=" << p;
      }
    }
  }
}

TEST(Delta, ConjugateDuality) {
  std::mt19937_64 rng(7);
  std::vector<Partition> lambdas;
  for (int w = 0; w <= 6; ++w)
    for (const auto& lambda : partitions_of(w)) lambdas.push_back(lambda);
  for (int trial = 0; trial < 200; ++trial) {
    const RationalSequence h = random_sequence(rng, 10);
    const RationalSequence e = dual_sequence(h, 12);
    for (const auto& lambda : lambdas) ASSERT_EQ(delta(lambda, e), delta(conjugate(lambda), h)) << to_string(lambda);
  }
}

TEST(CPolynomial, ArithmeticAndRendering) {
  const int m = 2, n = 4;
  const CPolynomial c1 = CPolynomial::c(m, n, 1), c2 = CPolynomial::c(m, n, 2);
  EXPECT_TRUE(CPolynomial::c(m, n, 3).is_zero());
  EXPECT_EQ(CPolynomial::c(m, n, 0), CPolynomial::constant(m, n, 1));
  const CPolynomial f = c1 * c1 * CPolynomial::q(m, n) * Rational(3, 2) - c2;
  EXPECT_EQ(f.debug_string(), "3/2·c1^2·q − c2");
  EXPECT_EQ(f.homogeneous_components().size(), 2u);
  EXPECT_TRUE((f - f).is_zero());
}

TEST(SigmaPolynomial, Examples) {
  const RingParams params(2, 2);
  const int n = params.n();
  EXPECT_EQ(sigma_polynomial(Partition({1, 1}), params), CPolynomial::c(2, n, 2));
  EXPECT_EQ(sigma_polynomial(Partition({1}), params), CPolynomial::c(2, n, 1));
  EXPECT_EQ(sigma_polynomial(Partition({2, 2}), params), CPolynomial::c(2, n, 2) * CPolynomial::c(2, n, 2));
  EXPECT_TRUE(sigma_polynomial(Partition({1, 1, 1}), params).is_zero());
  const RingParams wide(3, 2);
  for (int p = 1; p <= 3; ++p) {
    std::vector<int> column(static_cast<std::size_t>(p), 1);
    EXPECT_EQ(sigma_polynomial(Partition(column), wide), CPolynomial::c(3, wide.n(), p));
  }
  EXPECT_EQ(special_sigma_polynomial(2, params), sigma_polynomial(Partition({2}), params));
}

TEST(SigmaPolynomial, LinearlyIndependentByDegree) {
  for (int m = 1; m <= 3; ++m) {
    for (int degree = 0; degree <= 10; ++degree) {
      const RingParams params(m, std::max(degree, 1));
      std::vector<CPolynomial> polys;
      for (const auto& lambda : partitions_of(degree))
        if (static_cast<int>(lambda.length()) <= m) polys.push_back(sigma_polynomial(lambda, params));
      // The number of monomials of that degree equals the number of such partitions.
      std::vector<int> exps(static_cast<std::size_t>(m), 0);
      std::vector<std::vector<int>> monos;
      monomials(m, degree, 1, exps, monos);
      ASSERT_EQ(polys.size(), monos.size());
      ASSERT_EQ(polynomial_rank(polys), polys.size()) << "m=" << m << " degree=" << degree;
    }
  }
}

TEST(NormalForm, Examples) {
  const RingParams params(2, 2);
  EXPECT_EQ(normal_form(CPolynomial::constant(2, 4, 1), params), QClass::one(params));
  const CPolynomial f = CPolynomial::c(2, 4, 2) * sigma_polynomial(Partition({2, 1}), params);
  EXPECT_EQ(normal_form(f, params), QClass::basis(params, Partition({1}), 1));
  for (const auto& [m, k] : qschubert::testing::boxes_up_to(6)) {
    for (const Rational& alpha : {Rational(0), Rational(1), Rational(7, 3)}) {
      const RingParams p(m, k, alpha);
      const Rational sign = m % 2 == 1 ? Rational(1) : Rational(-1);
      ASSERT_EQ(normal_form(special_sigma_polynomial(p.n(), p), p),
                QClass::basis(p, Partition{}, 1, sign * alpha))
          << to_string(p);
    }
  }
}

TEST(NormalForm, BasisPolynomialsReduceToThemselves) {
  for (const auto& [m, k] : qschubert::testing::boxes_up_to(6)) {
    const RingParams params(m, k, Rational(5, 2));
    for (const auto& lambda : partitions_in_box(params.box())) {
      const CPolynomial f = sigma_polynomial(lambda, params) * CPolynomial::q(m, params.n());
      ASSERT_EQ(normal_form(f, params), QClass::basis(params, lambda, 1));
    }
  }
}

TEST(NormalForm, SliceDimensionsCountBasis) {
  const RingParams params(2, 3);
  const auto& oracle = oracle_for(params);
  for (int degree = 0; degree <= 3 * params.n(); ++degree) {
    std::size_t expected = 0;
    for (const auto& lambda : partitions_in_box(params.box()))
      if (lambda.weight() <= degree && (degree - lambda.weight()) % params.n() == 0) ++expected;
    ASSERT_EQ(oracle.slice_dimension(degree), expected) << "degree=" << degree;
  }
}

TEST(NormalForm, DegreeCapIsEnforced) {
  const RingParams params(2, 2);
  const CPolynomial q = CPolynomial::q(2, 4);
  EXPECT_THROW(normal_form(q * q * q * q, params), std::invalid_argument);
  EXPECT_EQ(normal_form(q * q * q * q, params, 16), QClass::basis(params, Partition{}, 4));
  EXPECT_THROW(normal_form(q, params, 3), std::invalid_argument);
}

TEST(NormalForm, QIsNotAZeroDivisor) {
  std::mt19937_64 rng(99);
  for (const auto& [m, k] : qschubert::testing::boxes_up_to(6)) {
    for (const Rational& alpha : {Rational(0), Rational(1)}) {
      const RingParams params(m, k, alpha);
      const int n = params.n();
      const CPolynomial q = CPolynomial::q(m, n);
      for (int degree = 0; degree <= 2 * n; ++degree) {
        std::vector<int> exps(static_cast<std::size_t>(m), 0);
        std::vector<std::vector<int>> monos;
        monomials(m, degree, 1, exps, monos);
        for (int trial = 0; trial < 3; ++trial) {
          CPolynomial f(m, n);
          for (const auto& mono : monos) {
            std::vector<int> full = mono;
            full.push_back(0);
            f.add_term(full, random_rational(rng, -2, 2));
          }
          if (degree >= n) {
            // Mix in lower q-powers so the test sees genuine S[q] inputs.
            for (const auto& lower : [&] {
                   std::vector<int> e(static_cast<std::size_t>(m), 0);
                   std::vector<std::vector<int>> out;
                   monomials(m, degree - n, 1, e, out);
                   return out;
                 }()) {
              std::vector<int> full = lower;
              full.push_back(1);
              f.add_term(full, random_rational(rng, -2, 2));
            }
          }
          const QClass reduced = normal_form(f, params, 3 * n);
          if (reduced.is_zero()) continue;
          ASSERT_FALSE(normal_form(q * f, params, 3 * n).is_zero()) << to_string(params) << " degree=" << degree;
        }
      }
    }
  }
}
