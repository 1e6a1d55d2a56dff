#include "qschubert/partition.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace qschubert {

BoxBound::BoxBound(int rows_, int cols_) : rows(rows_), cols(cols_) {
  if (rows < 1 || cols < 1) throw std::invalid_argument("box bounds must be positive");
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw std::invalid_argument("partition parts must be weakly decreasing");
  }
  weight_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::rectangle(int rows, int cols) {
  if (rows <= 0 || cols <= 0) return {};
  return Partition(std::vector<int>(static_cast<std::size_t>(rows), cols));
}

bool Partition::contains(const Partition& inner) const {
  if (inner.length() > length()) return false;
  for (std::size_t i = 0; i < inner.length(); ++i)
    if (inner.parts_[i] > parts_[i]) return false;
  return true;
}

bool Partition::fits_in(const BoxBound& box) const {
  return length() <= static_cast<std::size_t>(box.rows) && (*this)[0] <= box.cols;
}

bool lex_less(const Partition& mu, const Partition& lambda) {
  const std::size_t len = std::max(mu.length(), lambda.length());
  for (std::size_t i = 0; i < len; ++i)
    if (mu[i] != lambda[i]) return mu[i] < lambda[i];
  return false;
}

std::strong_ordering deg_lex_compare(const Partition& mu, const Partition& lambda) {
  if (mu.weight() != lambda.weight()) return mu.weight() <=> lambda.weight();
  if (lex_less(mu, lambda)) return std::strong_ordering::less;
  if (lex_less(lambda, mu)) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::strong_ordering operator<=>(const Partition& a, const Partition& b) { return deg_lex_compare(a, b); }

Partition conjugate(const Partition& lambda) {
  std::vector<int> parts(static_cast<std::size_t>(lambda[0]), 0);
  for (int row : lambda.parts())
    for (int j = 0; j < row; ++j) ++parts[static_cast<std::size_t>(j)];
  return Partition(std::move(parts));
}

namespace {

std::vector<Partition> sorted_unique(std::vector<Partition> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

void vertical_rec(const Partition& lambda, int rows, std::size_t row, int remaining, std::vector<int>& mu,
                  std::vector<Partition>& out) {
  if (remaining == 0) {
    std::vector<int> parts = mu;
    for (std::size_t i = row; i < lambda.length(); ++i) parts.push_back(lambda[i]);
    out.emplace_back(std::move(parts));
    return;
  }
  if (row >= static_cast<std::size_t>(rows)) return;
  // Rows that remain are too few for the boxes still to place.
  if (static_cast<int>(static_cast<std::size_t>(rows) - row) < remaining) return;
  const int above = row == 0 ? std::numeric_limits<int>::max() : mu[row - 1];
  for (int add : {1, 0}) {
    const int part = lambda[row] + add;
    if (part > above) continue;
    if (part == 0 && add == 0) {
      // Every lower row of lambda is empty too; an empty row cannot be skipped.
      continue;
    }
    mu.push_back(part);
    vertical_rec(lambda, rows, row + 1, remaining - add, mu, out);
    mu.pop_back();
  }
}

void horizontal_rec(const Partition& lambda, const BoxBound& box, std::size_t row, int remaining,
                    std::vector<int>& mu, std::vector<Partition>& out) {
  if (remaining == 0) {
    std::vector<int> parts = mu;
    for (std::size_t i = row; i < lambda.length(); ++i) parts.push_back(lambda[i]);
    out.emplace_back(std::move(parts));
    return;
  }
  if (row >= static_cast<std::size_t>(box.rows)) return;
  const int upper = row == 0 ? box.cols : lambda[row - 1];
  const int base = lambda[row];
  if (base == 0 && row > 0 && mu[row - 1] == 0) return;
  for (int part = std::min(upper, base + remaining); part >= base; --part) {
    mu.push_back(part);
    horizontal_rec(lambda, box, row + 1, remaining - (part - base), mu, out);
    mu.pop_back();
  }
}

}  // namespace

std::vector<Partition> add_vertical_strips(const Partition& lambda, int p, int rows) {
  if (p < 0) throw std::invalid_argument("strip size must be non-negative");
  if (p == 0) return {lambda};
  if (lambda.length() > static_cast<std::size_t>(std::max(rows, 0))) return {};
  std::vector<Partition> out;
  std::vector<int> mu;
  vertical_rec(lambda, rows, 0, p, mu, out);
  return sorted_unique(std::move(out));
}

std::vector<Partition> add_horizontal_strips(const Partition& lambda, int p, const BoxBound& box) {
  if (p < 0) throw std::invalid_argument("strip size must be non-negative");
  if (!lambda.fits_in(box)) return {};
  if (p == 0) return {lambda};
  std::vector<Partition> out;
  std::vector<int> mu;
  horizontal_rec(lambda, box, 0, p, mu, out);
  return sorted_unique(std::move(out));
}

std::vector<Box> outer_rim(const Partition& lambda) {
  if (lambda.empty()) throw std::invalid_argument("outer rim of the empty partition");
  std::vector<Box> rim;
  for (std::size_t i = 0; i < lambda.length(); ++i) {
    const int lo = std::max(1, lambda[i + 1]);
    for (int j = lo; j <= lambda[i]; ++j) rim.push_back({static_cast<int>(i) + 1, j});
  }
  return rim;
}

namespace {

// Row i keeps nu_i boxes; the deleted boxes (i, nu_i+1..lambda_i) lie in the
// rim exactly when nu_i >= lambda_{i+1} - 1.
void removal_rec(const Partition& lambda, std::size_t row, int remaining, std::vector<int>& nu,
                 std::vector<Partition>& out) {
  if (row == lambda.length()) {
    if (remaining == 0) out.emplace_back(nu);
    return;
  }
  const int lo = std::max(0, lambda[row + 1] - 1);
  const int hi = row == 0 ? lambda[row] : std::min(lambda[row], nu[row - 1]);
  for (int keep = hi; keep >= lo; --keep) {
    const int removed = lambda[row] - keep;
    if (removed > remaining) break;
    nu.push_back(keep);
    removal_rec(lambda, row + 1, remaining - removed, nu, out);
    nu.pop_back();
  }
}

}  // namespace

std::vector<Partition> rim_removals(const Partition& lambda, int count, RimMode mode) {
  if (lambda.empty()) throw std::invalid_argument("rim removal from the empty partition");
  if (count < 0) return {};
  std::vector<Partition> candidates;
  std::vector<int> nu;
  removal_rec(lambda, 0, count, nu, candidates);

  std::vector<Partition> out;
  const Partition lambda_conj = conjugate(lambda);
  for (auto& cand : candidates) {
    bool ok = true;
    if (mode == RimMode::each_row) {
      for (std::size_t i = 0; i < lambda.length() && ok; ++i) ok = cand[i] < lambda[i];
    } else {
      const Partition cand_conj = conjugate(cand);
      for (std::size_t j = 0; j < lambda_conj.length() && ok; ++j) ok = cand_conj[j] < lambda_conj[j];
    }
    if (ok) out.push_back(std::move(cand));
  }
  return sorted_unique(std::move(out));
}

Partition dual_partition(const Partition& nu, const BoxBound& box) {
  if (!nu.fits_in(box)) throw std::invalid_argument("partition " + to_string(nu) + " does not fit in the box");
  std::vector<int> parts(static_cast<std::size_t>(box.rows));
  for (int i = 0; i < box.rows; ++i)
    parts[static_cast<std::size_t>(i)] = box.cols - nu[static_cast<std::size_t>(box.rows - 1 - i)];
  return Partition(std::move(parts));
}

namespace {

void box_rec(const BoxBound& box, int max_part, std::vector<int>& parts, std::vector<Partition>& out) {
  out.emplace_back(parts);
  if (static_cast<int>(parts.size()) == box.rows) return;
  for (int part = 1; part <= max_part; ++part) {
    parts.push_back(part);
    box_rec(box, part, parts, out);
    parts.pop_back();
  }
}

void weight_rec(int remaining, int max_part, std::vector<int>& parts, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(parts);
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    parts.push_back(part);
    weight_rec(remaining - part, part, parts, out);
    parts.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_in_box(const BoxBound& box) {
  std::vector<Partition> out;
  std::vector<int> parts;
  box_rec(box, box.cols, parts, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Partition> partitions_of(int weight) {
  if (weight < 0) return {};
  std::vector<Partition> out;
  std::vector<int> parts;
  weight_rec(weight, weight, parts, out);
  std::sort(out.begin(), out.end());
  return out;
}

GrassPermutation::GrassPermutation(std::vector<int> values) : values_(std::move(values)) {
  std::vector<bool> seen(values_.size() + 1, false);
  for (int v : values_) {
    if (v < 1 || v > static_cast<int>(values_.size()) || seen[static_cast<std::size_t>(v)])
      throw std::invalid_argument("not a permutation of 1..n");
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Partition perm_to_partition(const GrassPermutation& w, int m) {
  const auto vals = w.values();
  const int n = static_cast<int>(vals.size());
  if (m < 0 || m > n) throw std::invalid_argument("descent position out of range");
  for (int i = 1; i < n; ++i) {
    if (i == m) continue;
    if (vals[static_cast<std::size_t>(i - 1)] > vals[static_cast<std::size_t>(i)])
      throw std::invalid_argument("permutation has a descent outside position m");
  }
  std::vector<int> parts;
  for (int i = m; i >= 1; --i) parts.push_back(vals[static_cast<std::size_t>(i - 1)] - i);
  return Partition(std::move(parts));
}

GrassPermutation partition_to_perm(const Partition& lambda, int m, int n) {
  if (m < 0 || m > n || lambda.length() > static_cast<std::size_t>(m) || lambda[0] > n - m)
    throw std::invalid_argument("partition does not fit in m x (n - m)");
  std::vector<int> values;
  std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
  for (int i = 1; i <= m; ++i) {
    const int v = lambda[static_cast<std::size_t>(m - i)] + i;
    values.push_back(v);
    used[static_cast<std::size_t>(v)] = true;
  }
  for (int v = 1; v <= n; ++v)
    if (!used[static_cast<std::size_t>(v)]) values.push_back(v);
  return GrassPermutation(std::move(values));
}

std::string to_string(const Partition& lambda) {
  if (lambda.empty()) return "-";
  std::string out;
  for (std::size_t i = 0; i < lambda.length(); ++i) {
    if (i) out += ',';
    out += std::to_string(lambda[i]);
  }
  return out;
}

Partition parse_partition(std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  if (text.empty() || text == "-") return {};
  std::vector<int> parts;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto comma = std::min(text.find(',', pos), text.size());
    const std::string_view field = text.substr(pos, comma - pos);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (field.empty() || ec != std::errc{} || ptr != field.data() + field.size() || value <= 0)
      throw std::invalid_argument("malformed partition '" + std::string(text) + "'");
    parts.push_back(value);
    pos = comma + 1;
  }
  try {
    return Partition(std::move(parts));
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("malformed partition '" + std::string(text) + "': parts must be weakly decreasing");
  }
}

std::ostream& operator<<(std::ostream& os, const Partition& lambda) {
  if (lambda.empty()) return os << "∅";
  return os << '(' << to_string(lambda) << ')';
}

}  // namespace qschubert
