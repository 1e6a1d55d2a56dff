#pragma once

// Two worked examples outside Gr(m, n): the two-parameter family of quantum
// deformations of LG(2,4), and Seidel orbits in the complete flag variety
// GL(n)/B.

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qschubert/rational.hpp"

namespace qschubert {

// --- LG(2,4) ---------------------------------------------------------------

/// deg(tau_i) = i for i = 0..3. Homogeneity of the table forces deg(q) = 3.
inline constexpr int kLgQDegree = 3;

/// Linear combination of q^d tau_i, keyed by (d, i).
class LgElement {
 public:
  using Key = std::pair<int, int>;

  static LgElement tau(int i, int d = 0, const Rational& coeff = 1);

  const std::map<Key, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coeff(int d, int i) const;
  void add(int d, int i, const Rational& c);

  LgElement& operator+=(const LgElement& other);
  friend bool operator==(const LgElement&, const LgElement&) = default;

 private:
  std::map<Key, Rational> terms_;
};

/// "2*t2", "t3 + q", "0".
std::string to_string(const LgElement& x);

using LgTable = std::array<std::array<LgElement, 4>, 4>;

/// tau_i tau_j for the deformation with parameters (a, b), extended by the unit tau_0.
LgTable lg24_table(const Rational& a, const Rational& b);

LgElement lg24_multiply(const LgTable& table, const LgElement& x, const LgElement& y);

struct LgWitness {
  int i = 0;
  int j = 0;
  int d = 0;
  int w = 0;
  Rational value;
};

struct LgNonnegativity {
  bool nonnegative = true;
  /// First negative coefficient in table order (i <= j, then d, w).
  std::optional<LgWitness> witness;
};

LgNonnegativity lg24_is_nonnegative(const Rational& a, const Rational& b);

/// The closed region a <= b <= 2a.
bool lg24_in_cone(const Rational& a, const Rational& b);

/// (tau_i tau_j) tau_l == tau_i (tau_j tau_l) for all 64 triples.
bool lg24_associativity(const Rational& a, const Rational& b);

/// The family is a change-of-basis deformation of the quantum ring exactly when a = 1.
bool is_change_of_basis(const Rational& a, const Rational& b);

/// At q = 0 the table reduces to [X^1]^2 = 2[X^2], [X^1][X^2] = [X^3], and
/// every other product of positive-degree classes vanishes.
bool lg24_classical_limit_holds(const Rational& a, const Rational& b);

// --- GL(n)/B ---------------------------------------------------------------

/// One-line notation over {1..n}.
class Permutation {
 public:
  explicit Permutation(std::vector<int> values);
  static Permutation identity(int n);
  /// t = (n, 1, 2, ..., n-1).
  static Permutation seidel_generator(int n);

  const std::vector<int>& values() const { return values_; }
  int size() const { return static_cast<int>(values_.size()); }
  /// Inversion count.
  int length() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> values_;
};

/// (u o w)(i) = u(w(i)).
Permutation compose(const Permutation& u, const Permutation& w);

/// Digits when n <= 9 ("321654"), comma-separated otherwise.
std::string to_string(const Permutation& w);

/// Accepts "321654" or "3,2,1,6,5,4". Throws std::invalid_argument.
Permutation parse_permutation(std::string_view text);

struct FlagOrbitRow {
  int r = 0;
  Permutation w;
  int length = 0;
};

/// t^r w for r = 0..n-1. Throws when w is not a permutation of {1..n}.
std::vector<FlagOrbitRow> flag_seidel_orbit(const Permutation& w, int n);

}  // namespace qschubert
