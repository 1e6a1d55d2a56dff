#pragma once

// Candidate deformed bases
//   tau_lambda = sigma_lambda + sum a_{lambda,mu} q^{(|lambda|-|mu|)/n} sigma_mu
// of QH_alpha, their structure constants, and machine-checkable certificates
// that non-negativity forces every a_{lambda,mu} to vanish.

#include <istream>
#include <map>
#include <utility>
#include <vector>

#include "qschubert/partition.hpp"
#include "qschubert/qclass.hpp"
#include "qschubert/qring.hpp"
#include "qschubert/rational.hpp"

namespace qschubert {

using PartitionPair = std::pair<Partition, Partition>;

/// Pairs lambda, mu in the box with |lambda| - |mu| a positive multiple of n,
/// sorted by lambda then mu (degree-lexicographic).
std::vector<PartitionPair> admissible_pairs(const RingParams& params);

class DeformationCoeffs {
 public:
  explicit DeformationCoeffs(RingParams params) : params_(std::move(params)) {}

  const RingParams& params() const { return params_; }
  const std::map<PartitionPair, Rational>& coeffs() const { return coeffs_; }

  /// Throws std::invalid_argument for a non-admissible pair. Zero erases.
  void set(const Partition& lambda, const Partition& mu, const Rational& value);
  Rational get(const Partition& lambda, const Partition& mu) const;

  /// tau_lambda written in the sigma basis.
  QClass tau_in_sigma(const Partition& lambda) const;

  /// Change of basis for classes written in the tau basis / sigma basis.
  QClass tau_to_sigma(const QClass& in_tau) const;
  QClass sigma_to_tau(const QClass& in_sigma) const;

 private:
  RingParams params_;
  std::map<PartitionPair, Rational> coeffs_;
};

/// Reads lines `<lambda> ; <mu> ; <rational>`. Blank lines and lines starting
/// with '#' are skipped. Errors name the offending line.
DeformationCoeffs read_deformation_coeffs(std::istream& in, const RingParams& params);

/// N^{nu,d}_{lambda,mu} of the tau basis for all ordered pairs.
StructureConstantTable tau_structure_constants(const DeformationCoeffs& deformation);

struct Violation {
  StructureKey key;
  Rational value;
};

struct NegativityReport {
  /// Ascending (d, lambda, mu, nu).
  std::vector<Violation> violations;
  bool nonnegative() const { return violations.empty(); }
};

NegativityReport check_nonnegative(const DeformationCoeffs& deformation);

enum class CertificateBranch { positive, classical };

/// Divisibility witness for one admissible pair when alpha > 0: after p
/// multiplications by c_m, tau_lambda is divisible by q^d while the
/// a_{lambda,mu} term carries only q^{e'} with e' < d.
struct PositivePairRecord {
  Partition lambda;
  Partition mu;
  int p = 0;
  int lambda_shift_weight = 0;
  int mu_shift_weight = 0;
  int d = 0;
  int e_prime = 0;
  bool exponents_integral = false;
  /// c_m^p sigma = (alpha q)^e sigma_shifted verified by Pieri for both lambda and mu.
  bool seidel_identity = false;
  bool valid() const { return exponents_integral && seidel_identity && e_prime >= 0 && e_prime < d; }
};

/// lambda is the degree-lex maximum of c_l sigma_{lambda hat} classically.
struct LexMaxClaim {
  Partition lambda;
  Partition lambda_hat;
  int column_length = 0;
  bool holds = false;
};

/// sigma_{nu_1^dual} ... sigma_{nu_m^dual} sigma_nu = sigma_{(k^m)} classically.
struct DualProductClaim {
  Partition nu;
  Partition dual;
  bool holds = false;
};

/// The same product against sigma_mu vanishes: `lex` for |nu| = |mu| with
/// nu^dual >_lex mu^dual, `degree` for |nu| < |mu|.
struct VanishingClaim {
  enum class Kind { lex, degree };
  Kind kind = Kind::lex;
  Partition nu;
  Partition mu;
  bool holds = false;
};

struct ClassicalPairRecord {
  Partition lambda;
  Partition mu;
  bool lex_max = false;
  bool dual_product = false;
  bool valid() const { return lex_max && dual_product; }
};

struct CertificateReport {
  CertificateBranch branch = CertificateBranch::positive;
  RingParams params;

  /// Positive branch: one record per admissible pair.
  std::vector<PositivePairRecord> positive_pairs;

  /// Classical branch: one record per admissible pair plus the claim families.
  std::vector<ClassicalPairRecord> classical_pairs;
  std::vector<LexMaxClaim> lex_max_claims;
  std::vector<DualProductClaim> dual_product_claims;
  std::size_t lex_vanishing_checked = 0;
  std::size_t degree_vanishing_checked = 0;
  std::vector<VanishingClaim> vanishing_failures;

  bool valid() const;
};

/// Requires alpha > 0. `jobs` > 1 evaluates pairs concurrently; the report
/// order does not depend on it.
CertificateReport certify_positive_branch(const RingParams& params, unsigned jobs = 1);

/// Requires alpha = 0.
CertificateReport certify_classical_branch(const RingParams& params, unsigned jobs = 1);

/// sigma_{nu_1^dual} ... sigma_{nu_m^dual} sigma_mu in the ring of `params`.
QClass dual_special_product(const Partition& nu, const Partition& mu, const RingParams& params);

}  // namespace qschubert
