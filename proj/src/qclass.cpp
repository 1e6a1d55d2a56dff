#include "qschubert/qclass.hpp"

#include <ostream>
#include <stdexcept>

namespace qschubert {

RingParams::RingParams(int m_, int k_, Rational alpha_) : m(m_), k(k_), alpha(std::move(alpha_)) {
  if (m < 1 || k < 1) throw std::invalid_argument("ring parameters need m >= 1 and k >= 1");
}

std::string to_string(const RingParams& params) {
  return "m=" + std::to_string(params.m) + " k=" + std::to_string(params.k) + " alpha=" + to_string(params.alpha);
}

QClass QClass::basis(const RingParams& params, const Partition& lambda, int d, const Rational& coeff) {
  QClass x(params);
  x.add(d, lambda, coeff);
  return x;
}

Rational QClass::coeff(int d, const Partition& lambda) const {
  const auto it = terms_.find(Term{d, lambda});
  return it == terms_.end() ? Rational(0) : it->second;
}

void QClass::add(int d, const Partition& lambda, const Rational& c) {
  if (d < 0) throw std::invalid_argument("negative q-exponent");
  if (!lambda.fits_in(params_.box()))
    throw std::invalid_argument("partition " + to_string(lambda) + " does not fit in " + std::to_string(params_.m) +
                                "x" + std::to_string(params_.k));
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(Term{d, lambda}, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

QClass& QClass::operator+=(const QClass& other) {
  require_same_ring(*this, other);
  for (const auto& [t, c] : other.terms_) add(t.d, t.lambda, c);
  return *this;
}

QClass& QClass::operator-=(const QClass& other) {
  require_same_ring(*this, other);
  for (const auto& [t, c] : other.terms_) add(t.d, t.lambda, -c);
  return *this;
}

QClass& QClass::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [t, c] : terms_) c *= scalar;
  return *this;
}

QClass QClass::shifted_q(int e) const {
  QClass out(params_);
  for (const auto& [t, c] : terms_) out.add(t.d + e, t.lambda, c);
  return out;
}

std::optional<int> QClass::homogeneous_degree() const {
  std::optional<int> degree;
  for (const auto& [t, c] : terms_) {
    const int deg = t.d * params_.n() + t.lambda.weight();
    if (degree && *degree != deg) return std::nullopt;
    degree = deg;
  }
  return degree;
}

void require_same_ring(const QClass& a, const QClass& b) {
  if (!(a.params() == b.params()))
    throw std::invalid_argument("ring parameters differ: " + to_string(a.params()) + " vs " + to_string(b.params()));
}

std::optional<SingleTerm> is_single_term(const QClass& x) {
  if (x.size() != 1) return std::nullopt;
  const auto& [t, c] = *x.terms().begin();
  return SingleTerm{c, t.d, t.lambda};
}

std::string to_string(const QClass& x) {
  if (x.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [t, c] : x.terms()) {
    const bool negative = c < 0;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const Rational mag = abs(c);
    if (mag != 1) out += to_string(mag) + "*";
    if (t.d == 1) out += "q*";
    if (t.d > 1) out += "q^" + std::to_string(t.d) + "*";
    out += "sigma[" + to_string(t.lambda) + "]";
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const QClass& x) { return os << to_string(x); }

}  // namespace qschubert
