#pragma once

// Seidel shifts on partitions inside m x k. The single step is
//   (lambda_1 + 1, ..., lambda_m + 1)   when lambda_1 < k,
//   (lambda_2, ..., lambda_m, 0)        when lambda_1 = k,
// and it has order n = m + k.

#include <vector>

#include "qschubert/partition.hpp"

namespace qschubert {

Partition shift_once(const Partition& lambda, const BoxBound& box);

/// p-fold shift; p is reduced mod n first, so negative p shifts down.
Partition shift(const Partition& lambda, int p, const BoxBound& box);

class SeidelOrbit {
 public:
  /// Builds the n-cycle of lambda. Throws InternalError if the cycle does not
  /// close or the weights do not sum to kmn/2.
  SeidelOrbit(const Partition& base, const BoxBound& box);

  const Partition& base() const { return shifts_.front(); }
  const BoxBound& box() const { return box_; }
  const std::vector<Partition>& shifts() const { return shifts_; }
  const std::vector<int>& weights() const { return weights_; }
  int weight_sum() const;

 private:
  BoxBound box_;
  std::vector<Partition> shifts_;
  std::vector<int> weights_;
};

SeidelOrbit orbit(const Partition& lambda, const BoxBound& box);

struct SeparatingShift {
  int p = 0;
  int lambda_weight = 0;  // |lambda shifted by p|
  int mu_weight = 0;      // |mu shifted by p|
};

/// Smallest p in 0..n-1 with |lambda^p| < |mu^p|. Requires |lambda| > |mu|.
SeparatingShift find_separating_shift(const Partition& lambda, const Partition& mu, const BoxBound& box);

}  // namespace qschubert
