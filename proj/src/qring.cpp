#include "qschubert/qring.hpp"

#include <algorithm>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <tuple>

namespace qschubert {

namespace {

void require_in_box(const Partition& lambda, const RingParams& params) {
  if (!lambda.fits_in(params.box()))
    throw std::invalid_argument("partition " + to_string(lambda) + " does not fit in " + std::to_string(params.m) +
                                "x" + std::to_string(params.k));
}

}  // namespace

QClass pieri_chern(int p, const Partition& lambda, const RingParams& params) {
  if (p < 1 || p > params.m) throw std::invalid_argument("c_p needs 1 <= p <= m");
  require_in_box(lambda, params);
  QClass out(params);
  for (const auto& mu : add_vertical_strips(lambda, p, params.m))
    if (mu[0] <= params.k) out.add(0, mu, 1);
  if (lambda[0] == params.k && params.alpha != 0) {
    for (const auto& nu : rim_removals(lambda, params.n() - p, RimMode::each_column)) out.add(1, nu, params.alpha);
  }
  return out;
}

QClass pieri_special(int p, const Partition& lambda, const RingParams& params) {
  if (p < 1 || p > params.k) throw std::invalid_argument("sigma_p needs 1 <= p <= k");
  require_in_box(lambda, params);
  QClass out(params);
  for (const auto& mu : add_horizontal_strips(lambda, p, params.box())) out.add(0, mu, 1);
  if (lambda[static_cast<std::size_t>(params.m - 1)] != 0 && params.alpha != 0) {
    for (const auto& nu : rim_removals(lambda, params.n() - p, RimMode::each_row)) out.add(1, nu, params.alpha);
  }
  return out;
}

QClass apply_chern(int p, const QClass& x) {
  QClass out(x.params());
  for (const auto& [t, c] : x.terms()) {
    const QClass product = pieri_chern(p, t.lambda, x.params());
    for (const auto& [u, b] : product.terms()) out.add(t.d + u.d, u.lambda, c * b);
  }
  return out;
}

QClass apply_special(int p, const QClass& x) {
  QClass out(x.params());
  for (const auto& [t, c] : x.terms()) {
    const QClass product = pieri_special(p, t.lambda, x.params());
    for (const auto& [u, b] : product.terms()) out.add(t.d + u.d, u.lambda, c * b);
  }
  return out;
}

QClass special_class(int s, const RingParams& params) {
  const int n = params.n();
  if (s > n) throw std::invalid_argument("sigma_" + std::to_string(s) + " lies beyond sigma_n");
  QClass out(params);
  if (s == 0) {
    out.add(0, Partition{}, 1);
  } else if (s >= 1 && s <= params.k) {
    out.add(0, Partition{s}, 1);
  } else if (s == n) {
    const Rational sign = params.m % 2 == 1 ? Rational(1) : Rational(-1);
    out.add(1, Partition{}, sign * params.alpha);
  }
  return out;
}

namespace {

// Delta_{mu'}(c) as signed products of c-indices; index 0 factors are dropped
// and indices outside 0..m kill the term.
using CMonomial = std::vector<int>;

std::map<CMonomial, Rational> c_expansion(const Partition& mu, int m) {
  const Partition conj = conjugate(mu);
  const std::size_t size = conj.length();
  std::map<CMonomial, Rational> out;
  std::vector<bool> used(size, false);
  CMonomial factors;
  auto rec = [&](auto& self, std::size_t row, bool negative) -> void {
    if (row == size) {
      CMonomial key = factors;
      std::sort(key.begin(), key.end());
      auto [it, inserted] = out.try_emplace(key, 0);
      it->second += negative ? -1 : 1;
      if (it->second == 0) out.erase(it);
      return;
    }
    std::size_t smaller_used = 0;
    for (std::size_t col = 0; col < size; ++col) {
      if (used[col]) {
        ++smaller_used;
        continue;
      }
      const int index = conj[row] + static_cast<int>(col) - static_cast<int>(row);
      if (index < 0 || index > m) continue;
      const bool flip = ((col - smaller_used) % 2) == 1;
      used[col] = true;
      if (index > 0) factors.push_back(index);
      self(self, row + 1, negative != flip);
      if (index > 0) factors.pop_back();
      used[col] = false;
    }
  };
  rec(rec, 0, false);
  return out;
}

struct ProductMemo {
  std::shared_mutex mutex;
  std::map<std::tuple<int, int, Rational, Partition, Partition>, QClass> products;
};

ProductMemo& product_memo() {
  static ProductMemo memo;
  return memo;
}

}  // namespace

QClass multiply_basis(const Partition& lambda, const Partition& mu, const RingParams& params) {
  require_in_box(lambda, params);
  require_in_box(mu, params);
  auto& memo = product_memo();
  auto key = std::make_tuple(params.m, params.k, params.alpha, lambda, mu);
  {
    std::shared_lock lock(memo.mutex);
    const auto it = memo.products.find(key);
    if (it != memo.products.end()) return it->second;
  }

  QClass out(params);
  const QClass start = QClass::basis(params, lambda);
  for (const auto& [factors, coeff] : c_expansion(mu, params.m)) {
    QClass partial = start;
    for (int p : factors) {
      partial = apply_chern(p, partial);
      if (partial.is_zero()) break;
    }
    out += partial * coeff;
  }

  std::unique_lock lock(memo.mutex);
  return memo.products.try_emplace(std::move(key), std::move(out)).first->second;
}

QClass multiply(const QClass& x, const QClass& y) {
  require_same_ring(x, y);
  QClass out(x.params());
  for (const auto& [tx, cx] : x.terms()) {
    for (const auto& [ty, cy] : y.terms()) {
      const QClass product = multiply_basis(tx.lambda, ty.lambda, x.params());
      for (const auto& [t, c] : product.terms()) out.add(t.d + tx.d + ty.d, t.lambda, c * cx * cy);
    }
  }
  return out;
}

Rational StructureConstantTable::at(const StructureKey& key) const {
  const auto it = entries_.find(key);
  return it == entries_.end() ? Rational(0) : it->second;
}

void StructureConstantTable::set(const StructureKey& key, const Rational& value) {
  if (key.lambda.weight() + key.mu.weight() != key.nu.weight() + key.d * params_.n())
    throw std::invalid_argument("structure constant index violates homogeneity");
  if (value == 0)
    entries_.erase(key);
  else
    entries_[key] = value;
}

StructureConstantTable structure_constants(const Partition& lambda, const Partition& mu, const RingParams& params) {
  StructureConstantTable table(params);
  const QClass product = multiply_basis(lambda, mu, params);
  for (const auto& [t, c] : product.terms())
    table.set(StructureKey{t.d, lambda, mu, t.lambda}, c);
  return table;
}

StructureConstantTable full_structure_constants(const RingParams& params, int max_d) {
  StructureConstantTable table(params);
  const auto basis = partitions_in_box(params.box());
  for (const auto& lambda : basis) {
    for (const auto& mu : basis) {
      const QClass product = multiply_basis(lambda, mu, params);
      for (const auto& [t, c] : product.terms()) {
        if (max_d >= 0 && t.d > max_d) continue;
        table.set(StructureKey{t.d, lambda, mu, t.lambda}, c);
      }
    }
  }
  return table;
}

QClass giambelli_determinant(const Partition& lambda, const RingParams& params) {
  require_in_box(lambda, params);
  const std::size_t size = static_cast<std::size_t>(params.m);
  const int n = params.n();
  QClass total(params);
  std::vector<bool> used(size, false);
  const Rational top_coeff = (params.m % 2 == 1 ? Rational(1) : Rational(-1)) * params.alpha;

  auto rec = [&](auto& self, std::size_t row, const QClass& partial, bool negative) -> void {
    if (row == size) {
      if (negative)
        total -= partial;
      else
        total += partial;
      return;
    }
    std::size_t smaller_used = 0;
    for (std::size_t col = 0; col < size; ++col) {
      if (used[col]) {
        ++smaller_used;
        continue;
      }
      const int s = lambda[row] + static_cast<int>(col) - static_cast<int>(row);
      if (s > n) throw std::invalid_argument("giambelli entry sigma_" + std::to_string(s) + " lies beyond sigma_n");
      if (s < 0 || (s > params.k && s < n)) continue;
      QClass next = partial;
      if (s == n)
        next = partial.shifted_q(1) * top_coeff;
      else if (s > 0)
        next = apply_special(s, partial);
      if (next.is_zero()) continue;
      const bool flip = ((col - smaller_used) % 2) == 1;
      used[col] = true;
      self(self, row + 1, next, negative != flip);
      used[col] = false;
    }
  };
  rec(rec, 0, QClass::one(params), false);
  return total;
}

bool giambelli_check(const Partition& lambda, const RingParams& params) {
  return giambelli_determinant(lambda, params) == QClass::basis(params, lambda);
}

}  // namespace qschubert
