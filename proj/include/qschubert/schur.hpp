#pragma once

// Determinantal symmetric functions over exact rationals, and the ideal
// normal-form oracle for QH_alpha = S[q] / <sigma_{k+1}, ..., sigma_{n-1},
// sigma_n + (-1)^m alpha q>, S = Q[c_1, ..., c_m].

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "qschubert/partition.hpp"
#include "qschubert/qclass.hpp"
#include "qschubert/rational.hpp"

namespace qschubert {

/// Sequence h_1, h_2, ... with h_0 = 1, h_{<0} = 0, and entries past the
/// stored length reading 0.
class RationalSequence {
 public:
  RationalSequence() = default;
  explicit RationalSequence(std::vector<Rational> values) : values_(std::move(values)) {}

  Rational operator[](int i) const {
    if (i == 0) return 1;
    if (i < 0 || i > static_cast<int>(values_.size())) return 0;
    return values_[static_cast<std::size_t>(i - 1)];
  }
  std::size_t size() const { return values_.size(); }
  std::span<const Rational> values() const { return values_; }
  friend bool operator==(const RationalSequence&, const RationalSequence&) = default;

 private:
  std::vector<Rational> values_;
};

/// Determinant by permutation expansion, walking rows and skipping zero
/// entries. `entry(i, j)` is 0-based; `is_zero` tests an entry.
template <class T, class Entry, class IsZero>
T leibniz_determinant(std::size_t size, Entry&& entry, IsZero&& is_zero, const T& one, const T& zero) {
  if (size == 0) return one;
  std::vector<bool> used(size, false);
  T total = zero;
  // Sign follows the parity of inversions accumulated as columns are chosen.
  auto rec = [&](auto& self, std::size_t row, const T& partial, bool negative) -> void {
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
      T value = entry(row, col);
      if (is_zero(value)) continue;
      // Inversions contributed: unused columns to the left of col.
      const bool flip = ((col - smaller_used) % 2) == 1;
      used[col] = true;
      self(self, row + 1, partial * value, negative != flip);
      used[col] = false;
    }
  };
  rec(rec, 0, one, false);
  return total;
}

/// det(h_{lambda_i + j - i}) of size l(lambda); 1 for the empty partition.
Rational delta(const Partition& lambda, const RationalSequence& h);

/// e_p = sum_{i=1}^p (-1)^{i-1} h_i e_{p-i} for p = 1..up_to.
RationalSequence dual_sequence(const RationalSequence& h, std::size_t up_to);

/// Polynomial in c_1..c_m and q. deg(c_p) = p, deg(q) = n. Exponent vectors
/// have m + 1 entries, q last.
class CPolynomial {
 public:
  using Exponents = std::vector<int>;
  using TermMap = std::map<Exponents, Rational>;

  CPolynomial(int m, int n);

  static CPolynomial constant(int m, int n, const Rational& value);
  /// c_p, with c_0 = 1 and c_p = 0 outside 0..m.
  static CPolynomial c(int m, int n, int p);
  static CPolynomial q(int m, int n);

  int num_c() const { return m_; }
  int q_degree_weight() const { return n_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Exponents& exps, const Rational& coeff);
  int degree(const Exponents& exps) const;

  /// Graded components keyed by degree.
  std::map<int, CPolynomial> homogeneous_components() const;

  CPolynomial& operator+=(const CPolynomial& other);
  CPolynomial& operator-=(const CPolynomial& other);
  CPolynomial& operator*=(const Rational& scalar);
  friend CPolynomial operator+(CPolynomial a, const CPolynomial& b) { return a += b; }
  friend CPolynomial operator-(CPolynomial a, const CPolynomial& b) { return a -= b; }
  friend CPolynomial operator*(CPolynomial a, const Rational& s) { return a *= s; }
  friend CPolynomial operator*(const CPolynomial& a, const CPolynomial& b);
  friend bool operator==(const CPolynomial&, const CPolynomial&) = default;

  /// Diagnostic rendering, e.g. "3/2·c1^2·q − c2".
  std::string debug_string() const;

 private:
  int m_;
  int n_;
  TermMap terms_;
};

/// Delta_{lambda'}(c) in S; zero when l(lambda) > m.
CPolynomial sigma_polynomial(const Partition& lambda, const RingParams& params);

/// sigma_p = Delta_{(1^p)}(c), the dual sequence of c evaluated at p.
CPolynomial special_sigma_polynomial(int p, const RingParams& params);

/// Rank of the span of the given polynomials (exact elimination).
std::size_t polynomial_rank(std::span<const CPolynomial> polys);

/// Thrown when an invariant that the mathematics guarantees fails to hold.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Graded linear-algebra model of QH_alpha. Each degree slice spans the ideal
/// by monomial multiples of the generators, reduces the basis polynomials
/// q^d Delta_{lambda'}(c) against it, and solves for the input. Slices are
/// cached; the cache is safe for concurrent readers and fills.
class IdealNormalForm {
 public:
  explicit IdealNormalForm(RingParams params);
  ~IdealNormalForm();

  const RingParams& params() const { return params_; }

  /// max(3n, 2mk): enough for every product of two basis classes.
  int default_degree_cap() const;

  /// Expansion of f in the basis { q^d sigma_lambda }. Throws
  /// std::invalid_argument when a component exceeds the cap and InternalError
  /// if the linear system is inconsistent.
  QClass reduce(const CPolynomial& f, std::optional<int> degree_cap = std::nullopt) const;

  /// Dimension of the quotient in a given degree.
  std::size_t slice_dimension(int degree) const;

 private:
  struct Slice;
  std::shared_ptr<const Slice> slice(int degree) const;
  std::shared_ptr<const Slice> build_slice(int degree) const;

  RingParams params_;
  std::vector<CPolynomial> generators_;
  mutable std::shared_mutex mutex_;
  mutable std::map<int, std::shared_ptr<const Slice>> slices_;
};

/// normal_form through a process-wide oracle per ring.
QClass normal_form(const CPolynomial& f, const RingParams& params, std::optional<int> degree_cap = std::nullopt);

/// Shared oracle instance for a ring.
const IdealNormalForm& oracle_for(const RingParams& params);

}  // namespace qschubert
