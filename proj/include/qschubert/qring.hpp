#pragma once

// Multiplication in QH_alpha on the Schubert basis: the quantum Pieri rules
// for c_p and sigma_p, general products through the conjugate Giambelli
// determinant sigma_mu = Delta_{mu'}(c), and structure constants.

#include <map>

#include "qschubert/partition.hpp"
#include "qschubert/qclass.hpp"
#include "qschubert/rational.hpp"

namespace qschubert {

/// c_p sigma_lambda for 1 <= p <= m: vertical strips inside the box, plus
/// alpha q sigma_nu over column-covering rim removals of n - p boxes when
/// lambda_1 = k.
QClass pieri_chern(int p, const Partition& lambda, const RingParams& params);

/// sigma_p sigma_lambda for 1 <= p <= k: horizontal strips inside the box, plus
/// alpha q sigma_nu over row-covering rim removals of n - p boxes when
/// lambda_m != 0.
QClass pieri_special(int p, const Partition& lambda, const RingParams& params);

/// Linear extensions of the two Pieri rules to arbitrary classes.
QClass apply_chern(int p, const QClass& x);
QClass apply_special(int p, const QClass& x);

/// The special class sigma_s read through the ideal: 1 for s = 0, sigma_(s) for
/// 1 <= s <= k, 0 for s < 0 and k < s < n, (-1)^{m-1} alpha q for s = n.
/// Throws for s > n.
QClass special_class(int s, const RingParams& params);

/// sigma_lambda * sigma_mu (memoized per ring and pair).
QClass multiply_basis(const Partition& lambda, const Partition& mu, const RingParams& params);

/// Bilinear product. Throws when the operands belong to different rings.
QClass multiply(const QClass& x, const QClass& y);

/// Index of a structure constant N^{nu,d}_{lambda,mu}. Ordered by d, then
/// lambda, mu, nu in degree-lexicographic order.
struct StructureKey {
  int d = 0;
  Partition lambda;
  Partition mu;
  Partition nu;
  friend auto operator<=>(const StructureKey&, const StructureKey&) = default;
  friend bool operator==(const StructureKey&, const StructureKey&) = default;
};

/// Nonzero structure constants; absent entries are 0.
class StructureConstantTable {
 public:
  explicit StructureConstantTable(RingParams params) : params_(std::move(params)) {}

  const RingParams& params() const { return params_; }
  const std::map<StructureKey, Rational>& entries() const { return entries_; }

  Rational at(const StructureKey& key) const;
  /// Throws std::invalid_argument when |lambda| + |mu| != |nu| + d n.
  void set(const StructureKey& key, const Rational& value);

 private:
  RingParams params_;
  std::map<StructureKey, Rational> entries_;
};

/// Coefficients of sigma_lambda * sigma_mu.
StructureConstantTable structure_constants(const Partition& lambda, const Partition& mu, const RingParams& params);

/// Every ordered pair of basis classes; optionally only entries with d <= max_d.
StructureConstantTable full_structure_constants(const RingParams& params, int max_d = -1);

/// Evaluates det(sigma_{lambda_i + j - i})_{m x m} with products applied by
/// pieri_special.
QClass giambelli_determinant(const Partition& lambda, const RingParams& params);

/// True when the determinant above equals sigma_lambda.
bool giambelli_check(const Partition& lambda, const RingParams& params);

}  // namespace qschubert
