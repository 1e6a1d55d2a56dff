#include "qschubert/seidel.hpp"

#include <numeric>
#include <stdexcept>

#include "qschubert/schur.hpp"

namespace qschubert {

namespace {

void require_in_box(const Partition& lambda, const BoxBound& box) {
  if (!lambda.fits_in(box)) throw std::invalid_argument("partition " + to_string(lambda) + " does not fit in the box");
}

}  // namespace

Partition shift_once(const Partition& lambda, const BoxBound& box) {
  require_in_box(lambda, box);
  std::vector<int> parts;
  parts.reserve(static_cast<std::size_t>(box.rows));
  if (lambda[0] < box.cols) {
    for (int i = 0; i < box.rows; ++i) parts.push_back(lambda[static_cast<std::size_t>(i)] + 1);
  } else {
    for (int i = 1; i < box.rows; ++i) parts.push_back(lambda[static_cast<std::size_t>(i)]);
  }
  return Partition(std::move(parts));
}

Partition shift(const Partition& lambda, int p, const BoxBound& box) {
  require_in_box(lambda, box);
  const int n = box.rows + box.cols;
  const int steps = ((p % n) + n) % n;
  Partition out = lambda;
  for (int i = 0; i < steps; ++i) out = shift_once(out, box);
  return out;
}

SeidelOrbit::SeidelOrbit(const Partition& base, const BoxBound& box) : box_(box) {
  require_in_box(base, box);
  const int n = box.rows + box.cols;
  shifts_.push_back(base);
  for (int p = 1; p < n; ++p) shifts_.push_back(shift_once(shifts_.back(), box));
  for (const auto& s : shifts_) weights_.push_back(s.weight());
  if (!(shift_once(shifts_.back(), box) == base)) throw InternalError("Seidel orbit does not close after n steps");
  if (2 * weight_sum() != box.rows * box.cols * n) throw InternalError("Seidel orbit weights do not sum to kmn/2");
}

int SeidelOrbit::weight_sum() const { return std::accumulate(weights_.begin(), weights_.end(), 0); }

SeidelOrbit orbit(const Partition& lambda, const BoxBound& box) { return SeidelOrbit(lambda, box); }

SeparatingShift find_separating_shift(const Partition& lambda, const Partition& mu, const BoxBound& box) {
  require_in_box(lambda, box);
  require_in_box(mu, box);
  if (lambda.weight() <= mu.weight())
    throw std::invalid_argument("separating shift needs |lambda| > |mu|, got " + std::to_string(lambda.weight()) +
                                " and " + std::to_string(mu.weight()));
  const int n = box.rows + box.cols;
  Partition a = lambda;
  Partition b = mu;
  for (int p = 0; p < n; ++p) {
    if (a.weight() < b.weight()) return {p, a.weight(), b.weight()};
    a = shift_once(a, box);
    b = shift_once(b, box);
  }
  throw InternalError("no separating Seidel shift for " + to_string(lambda) + " and " + to_string(mu));
}

}  // namespace qschubert
