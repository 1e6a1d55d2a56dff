#pragma once

// Young diagram combinatorics for partitions bounded by an m x k rectangle.
//
// Rows and columns are numbered from 1, rows top to bottom. A partition is
// stored without trailing zeros; parts past the stored length read as 0.

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qschubert {

/// The m x k rectangle (k^m). Both bounds are at least 1.
struct BoxBound {
  int rows = 1;
  int cols = 1;

  BoxBound() = default;
  BoxBound(int rows, int cols);

  int area() const { return rows * cols; }
  friend bool operator==(const BoxBound&, const BoxBound&) = default;
};

class Partition {
 public:
  Partition() = default;
  /// Accepts weakly decreasing non-negative parts; trailing zeros are dropped.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  /// (cols^rows); empty when either argument is 0.
  static Partition rectangle(int rows, int cols);

  /// i-th part, 0-based; 0 beyond the length.
  int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

  std::size_t length() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }
  int weight() const { return weight_; }
  std::span<const int> parts() const { return parts_; }

  /// True when `inner` is contained in this diagram.
  bool contains(const Partition& inner) const;
  bool fits_in(const BoxBound& box) const;

  friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
  /// Degree-lexicographic order.
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b);

 private:
  std::vector<int> parts_;
  int weight_ = 0;
};

/// (row, column), both 1-based.
struct Box {
  int row = 0;
  int col = 0;
  friend auto operator<=>(const Box&, const Box&) = default;
};

enum class RimMode { each_column, each_row };

Partition conjugate(const Partition& lambda);

/// All mu containing lambda with |mu/lambda| = p, at most `rows` rows, and at
/// most one new box per row. Sorted in degree-lexicographic order.
std::vector<Partition> add_vertical_strips(const Partition& lambda, int p, int rows);

/// All mu inside `box` containing lambda with |mu/lambda| = p and at most one
/// new box per column. Sorted in degree-lexicographic order.
std::vector<Partition> add_horizontal_strips(const Partition& lambda, int p, const BoxBound& box);

/// Boxes (i, j) with lambda_{i+1} <= j <= lambda_i. Throws on the empty partition.
std::vector<Box> outer_rim(const Partition& lambda);

/// Partitions obtained by deleting exactly `count` rim boxes so that every
/// column (each_column) or every nonempty row (each_row) of lambda loses at
/// least one box. Throws on the empty partition.
std::vector<Partition> rim_removals(const Partition& lambda, int count, RimMode mode);

std::strong_ordering deg_lex_compare(const Partition& mu, const Partition& lambda);

/// Lexicographic order on zero-padded part sequences, ignoring weight.
bool lex_less(const Partition& mu, const Partition& lambda);

/// (k - nu_m, ..., k - nu_1). Throws when nu does not fit in the box.
Partition dual_partition(const Partition& nu, const BoxBound& box);

/// Every partition inside the box, in degree-lexicographic order.
std::vector<Partition> partitions_in_box(const BoxBound& box);

/// Every partition of `weight` (no bound on rows or columns), sorted.
std::vector<Partition> partitions_of(int weight);

/// A permutation of {1..n} in one-line notation.
class GrassPermutation {
 public:
  explicit GrassPermutation(std::vector<int> values);
  std::span<const int> values() const { return values_; }
  std::size_t size() const { return values_.size(); }
  friend bool operator==(const GrassPermutation&, const GrassPermutation&) = default;

 private:
  std::vector<int> values_;
};

/// lambda = (w_m - m, ..., w_1 - 1). Requires w_i < w_{i+1} for every i != m.
Partition perm_to_partition(const GrassPermutation& w, int m);

/// Inverse of perm_to_partition for a partition inside m x (n - m).
GrassPermutation partition_to_perm(const Partition& lambda, int m, int n);

/// "2,1"; the empty partition is "-".
std::string to_string(const Partition& lambda);

/// Parses "2,1". "-" and "" give the empty partition. Throws std::invalid_argument.
Partition parse_partition(std::string_view text);

/// Debug form: "(2,1)" and "∅".
std::ostream& operator<<(std::ostream& os, const Partition& lambda);

}  // namespace qschubert
