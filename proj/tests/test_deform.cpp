#include <gtest/gtest.h>

#include <sstream>

#include "qschubert/deform.hpp"
#include "test_util.hpp"

using namespace qschubert;
using qschubert::testing::boxes_up_to;
using qschubert::testing::random_rational;

namespace {

DeformationCoeffs top_perturbation(const Rational& alpha, const Rational& t) {
  DeformationCoeffs d(RingParams(2, 2, alpha));
  d.set(Partition({2, 2}), Partition{}, t);
  return d;
}

DeformationCoeffs random_deformation(std::mt19937_64& rng, const RingParams& params) {
  DeformationCoeffs d(params);
  for (const auto& [lambda, mu] : admissible_pairs(params)) d.set(lambda, mu, random_rational(rng, -2, 2));
  return d;
}

bool has_violation(const NegativityReport& report, const StructureKey& key, const Rational& value) {
  for (const auto& v : report.violations)
    if (v.key == key && v.value == value) return true;
  return false;
}

}  // namespace

TEST(AdmissiblePairs, Examples) {
  EXPECT_EQ(admissible_pairs(RingParams(2, 2)), (std::vector<PartitionPair>{{Partition({2, 2}), Partition{}}}));
  EXPECT_TRUE(admissible_pairs(RingParams(1, 2)).empty());
  const auto pairs = admissible_pairs(RingParams(2, 3));
  EXPECT_NE(std::find(pairs.begin(), pairs.end(), PartitionPair{Partition({3, 2}), Partition{}}), pairs.end());
  for (const auto& [lambda, mu] : pairs) EXPECT_EQ(lambda.weight() - mu.weight(), 5);
  EXPECT_TRUE(std::is_sorted(pairs.begin(), pairs.end()));
}

TEST(DeformationCoeffs, RejectsInadmissiblePairs) {
  DeformationCoeffs d(RingParams(2, 2));
  EXPECT_THROW(d.set(Partition({2, 1}), Partition{}, 1), std::invalid_argument);
  EXPECT_THROW(d.set(Partition{}, Partition({2, 2}), 1), std::invalid_argument);
  d.set(Partition({2, 2}), Partition{}, 0);
  EXPECT_TRUE(d.coeffs().empty());
}

TEST(DeformationCoeffs, ReadsCoefficientFile) {
  std::istringstream in("# perturb the top class\n\n2,2 ; - ; 1/2\n");
  const DeformationCoeffs d = read_deformation_coeffs(in, RingParams(2, 2));
  EXPECT_EQ(d.get(Partition({2, 2}), Partition{}), Rational(1, 2));

  auto fails = [](const std::string& text) {
    std::istringstream bad(text);
    EXPECT_THROW(read_deformation_coeffs(bad, RingParams(2, 2)), std::invalid_argument) << text;
  };
  fails("2,2 ; -\n");
  fails("2,2 ; - ; x\n");
  fails("2,1 ; - ; 1\n");
  fails("2,2 ; - ; 1\n2,2 ; - ; 2\n");
  fails("3 ; - ; 1\n");
}

TEST(TauBasis, ZeroDeformationIsSchubert) {
  for (const auto& [m, k] : boxes_up_to(6)) {
    const RingParams params(m, k);
    ASSERT_EQ(tau_structure_constants(DeformationCoeffs(params)).entries(), full_structure_constants(params).entries());
  }
}

TEST(TauBasis, TopPerturbationConstants) {
  for (const Rational& t : {Rational(1, 2), Rational(-3), Rational(7, 5)}) {
    const auto table = tau_structure_constants(top_perturbation(1, t));
    const Partition e{}, v{1, 1}, top{2, 2};
    EXPECT_EQ(table.at({1, v, v, e}), -t);
    EXPECT_EQ(table.at({2, top, top, e}), 1 - t * t);
    EXPECT_EQ(table.at({1, top, top, top}), 2 * t);
  }
}

TEST(TauBasis, RoundTrip) {
  std::mt19937_64 rng(17);
  for (const auto& [m, k] : boxes_up_to(7)) {
    const RingParams params(m, k, Rational(3, 2));
    for (int trial = 0; trial < 10; ++trial) {
      const DeformationCoeffs d = random_deformation(rng, params);
      const QClass x = qschubert::testing::random_class(rng, params, 5);
      ASSERT_EQ(d.tau_to_sigma(d.sigma_to_tau(x)), x);
      ASSERT_EQ(d.sigma_to_tau(d.tau_to_sigma(x)), x);
    }
  }
}

TEST(TauBasis, StructureConstantsAreGraded) {
  std::mt19937_64 rng(3);
  for (const auto& [m, k] : boxes_up_to(6)) {
    const RingParams params(m, k);
    const auto table = tau_structure_constants(random_deformation(rng, params));
    for (const auto& [key, c] : table.entries())
      ASSERT_EQ(key.lambda.weight() + key.mu.weight(), key.nu.weight() + key.d * params.n());
  }
}

TEST(Negativity, Examples) {
  const auto positive = check_nonnegative(top_perturbation(1, Rational(1, 2)));
  ASSERT_FALSE(positive.nonnegative());
  EXPECT_EQ(positive.violations.front().key, (StructureKey{1, Partition({1, 1}), Partition({1, 1}), Partition{}}));
  EXPECT_EQ(positive.violations.front().value, Rational(-1, 2));

  const auto negative = check_nonnegative(top_perturbation(1, Rational(-1, 2)));
  EXPECT_TRUE(has_violation(negative, {1, Partition({2, 2}), Partition({2, 2}), Partition({2, 2})}, -1));

  for (const auto& [m, k] : boxes_up_to(6)) EXPECT_TRUE(check_nonnegative(DeformationCoeffs(RingParams(m, k))).nonnegative());
}

TEST(Negativity, ViolationsAreOrdered) {
  const auto report = check_nonnegative(top_perturbation(1, Rational(-2)));
  ASSERT_GT(report.violations.size(), 1u);
  for (std::size_t i = 1; i < report.violations.size(); ++i)
    ASSERT_LT(report.violations[i - 1].key, report.violations[i].key);
}

TEST(Negativity, TopPerturbationAlwaysDetected) {
  const std::vector<Rational> ts{Rational(1, 3), Rational(-1, 3), 1, -1, 2, -2};
  for (const Rational& alpha : {Rational(1, 2), Rational(1), Rational(3), Rational(0)}) {
    for (const auto& t : ts) EXPECT_FALSE(check_nonnegative(top_perturbation(alpha, t)).nonnegative());
    EXPECT_TRUE(check_nonnegative(top_perturbation(alpha, 0)).nonnegative());
  }
}

TEST(Negativity, RandomDeformationsAreDetected) {
  std::mt19937_64 rng(41);
  for (const auto& [m, k] : std::vector<std::pair<int, int>>{{2, 3}, {3, 2}, {3, 3}, {2, 4}}) {
    for (const Rational& alpha : {Rational(0), Rational(1)}) {
      const RingParams params(m, k, alpha);
      for (int trial = 0; trial < 10; ++trial) {
        const DeformationCoeffs d = random_deformation(rng, params);
        if (d.coeffs().empty()) continue;
        ASSERT_FALSE(check_nonnegative(d).nonnegative()) << to_string(params);
      }
    }
  }
}

TEST(PositiveCertificate, Examples) {
  const auto square = certify_positive_branch(RingParams(2, 2));
  ASSERT_EQ(square.positive_pairs.size(), 1u);
  const auto& rec = square.positive_pairs.front();
  EXPECT_EQ(rec.p, 2);
  EXPECT_EQ(rec.d, 2);
  EXPECT_EQ(rec.e_prime, 1);
  EXPECT_TRUE(rec.valid());
  EXPECT_TRUE(square.valid());
  EXPECT_TRUE(certify_positive_branch(RingParams(1, 2)).positive_pairs.empty());
  const auto wide = certify_positive_branch(RingParams(2, 3));
  EXPECT_EQ(wide.positive_pairs.size(), admissible_pairs(RingParams(2, 3)).size());
  EXPECT_TRUE(wide.valid());
  EXPECT_THROW(certify_positive_branch(RingParams(2, 2, 0)), std::invalid_argument);
}

TEST(PositiveCertificate, ValidAndDeterministicAcrossJobs) {
  for (const auto& [m, k] : boxes_up_to(7)) {
    const RingParams params(m, k, Rational(2));
    const auto serial = certify_positive_branch(params, 1);
    const auto parallel = certify_positive_branch(params, 4);
    ASSERT_TRUE(serial.valid()) << to_string(params);
    ASSERT_EQ(serial.positive_pairs.size(), parallel.positive_pairs.size());
    for (std::size_t i = 0; i < serial.positive_pairs.size(); ++i) {
      ASSERT_EQ(serial.positive_pairs[i].lambda, parallel.positive_pairs[i].lambda);
      ASSERT_EQ(serial.positive_pairs[i].mu, parallel.positive_pairs[i].mu);
      ASSERT_EQ(serial.positive_pairs[i].p, parallel.positive_pairs[i].p);
      ASSERT_EQ(serial.positive_pairs[i].d - serial.positive_pairs[i].e_prime,
                (serial.positive_pairs[i].mu_shift_weight - serial.positive_pairs[i].lambda_shift_weight) /
                    params.n());
    }
  }
}

TEST(ClassicalCertificate, Examples) {
  const RingParams params(2, 2, 0);
  const Partition top = Partition::rectangle(2, 2);
  EXPECT_EQ(dual_special_product(Partition{}, Partition{}, params), QClass::basis(params, top));
  EXPECT_TRUE(dual_special_product(Partition{}, Partition({1, 1}), params).is_zero());
  const auto report = certify_classical_branch(params);
  EXPECT_TRUE(report.valid());
  EXPECT_EQ(report.classical_pairs.size(), 1u);
  EXPECT_EQ(report.dual_product_claims.size(), 6u);
  EXPECT_EQ(report.lex_max_claims.size(), 5u);
  EXPECT_THROW(certify_classical_branch(RingParams(2, 2, 1)), std::invalid_argument);

  const auto wide = certify_classical_branch(RingParams(2, 3, 0), 3);
  EXPECT_TRUE(wide.valid());
  EXPECT_GT(wide.lex_vanishing_checked, 0u);
  EXPECT_GT(wide.degree_vanishing_checked, 0u);
}

TEST(ClassicalCertificate, ValidUpToSix) {
  for (const auto& [m, k] : boxes_up_to(6)) {
    const auto report = certify_classical_branch(RingParams(m, k, 0), 2);
    ASSERT_TRUE(report.valid()) << m << "x" << k;
    ASSERT_TRUE(report.vanishing_failures.empty());
  }
}
