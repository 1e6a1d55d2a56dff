#pragma once

// Elements of QH_alpha written in the Q-basis { q^d sigma_lambda : lambda in m x k }.

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "qschubert/partition.hpp"
#include "qschubert/rational.hpp"

namespace qschubert {

/// One member of the ring family: rows m, columns k, n = m + k, deg(q) = n.
struct RingParams {
  int m = 1;
  int k = 1;
  Rational alpha = 1;

  RingParams() = default;
  RingParams(int m, int k, Rational alpha = 1);

  int n() const { return m + k; }
  BoxBound box() const { return {m, k}; }
  friend bool operator==(const RingParams&, const RingParams&) = default;
};

std::string to_string(const RingParams& params);

/// Basis label q^d sigma_lambda. Ordered by ascending d, then degree-lex lambda.
struct Term {
  int d = 0;
  Partition lambda;
  friend auto operator<=>(const Term&, const Term&) = default;
  friend bool operator==(const Term&, const Term&) = default;
};

class QClass {
 public:
  using TermMap = std::map<Term, Rational>;

  explicit QClass(RingParams params) : params_(std::move(params)) {}

  static QClass basis(const RingParams& params, const Partition& lambda, int d = 0, const Rational& coeff = 1);
  static QClass one(const RingParams& params) { return basis(params, Partition{}); }

  const RingParams& params() const { return params_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Coefficient of q^d sigma_lambda (0 when absent).
  Rational coeff(int d, const Partition& lambda) const;

  /// Adds c q^d sigma_lambda. Throws when lambda leaves the box or d < 0.
  void add(int d, const Partition& lambda, const Rational& c);

  QClass& operator+=(const QClass& other);
  QClass& operator-=(const QClass& other);
  QClass& operator*=(const Rational& scalar);
  friend QClass operator+(QClass a, const QClass& b) { return a += b; }
  friend QClass operator-(QClass a, const QClass& b) { return a -= b; }
  friend QClass operator*(QClass a, const Rational& s) { return a *= s; }

  /// Multiplies by q^e.
  QClass shifted_q(int e) const;

  /// Total degree d n + |lambda| when all terms share it; empty for zero or
  /// inhomogeneous classes.
  std::optional<int> homogeneous_degree() const;

  friend bool operator==(const QClass& a, const QClass& b) {
    return a.params_ == b.params_ && a.terms_ == b.terms_;
  }

 private:
  RingParams params_;
  TermMap terms_;
};

/// Throws std::invalid_argument unless both operands live in the same ring.
void require_same_ring(const QClass& a, const QClass& b);

struct SingleTerm {
  Rational coeff;
  int d = 0;
  Partition lambda;
};

/// The unique term of x, if it has exactly one.
std::optional<SingleTerm> is_single_term(const QClass& x);

/// Text form used by the CLI: "sigma[2,2] + q*sigma[-]", "0" for zero.
std::string to_string(const QClass& x);

std::ostream& operator<<(std::ostream& os, const QClass& x);

}  // namespace qschubert
