#include "qschubert/exhibits.hpp"

#include <cctype>
#include <charconv>
#include <stdexcept>

namespace qschubert {

LgElement LgElement::tau(int i, int d, const Rational& coeff) {
  LgElement x;
  x.add(d, i, coeff);
  return x;
}

Rational LgElement::coeff(int d, int i) const {
  const auto it = terms_.find({d, i});
  return it == terms_.end() ? Rational(0) : it->second;
}

void LgElement::add(int d, int i, const Rational& c) {
  if (i < 0 || i > 3 || d < 0) throw std::invalid_argument("LG(2,4) basis index out of range");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace({d, i}, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LgElement& LgElement::operator+=(const LgElement& other) {
  for (const auto& [key, c] : other.terms_) add(key.first, key.second, c);
  return *this;
}

std::string to_string(const LgElement& x) {
  if (x.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [key, c] : x.terms()) {
    const auto [d, i] = key;
    const bool negative = c < 0;
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    first = false;
    const Rational mag = abs(c);
    std::vector<std::string> factors;
    if (d == 1) factors.emplace_back("q");
    if (d > 1) factors.push_back("q^" + std::to_string(d));
    if (i > 0) factors.push_back("t" + std::to_string(i));
    std::string body = (mag != 1 || factors.empty()) ? to_string(mag) : "";
    for (const auto& f : factors) body += (body.empty() ? "" : "*") + f;
    out += body;
  }
  return out;
}

LgTable lg24_table(const Rational& a, const Rational& b) {
  LgTable table;
  for (int i = 0; i < 4; ++i) {
    table[0][static_cast<std::size_t>(i)] = LgElement::tau(i);
    table[static_cast<std::size_t>(i)][0] = LgElement::tau(i);
  }
  auto set = [&](int i, int j, const LgElement& v) {
    table[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v;
    table[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = v;
  };
  LgElement t11 = LgElement::tau(2, 0, 2);
  LgElement t12 = LgElement::tau(3);
  t12.add(1, 0, 2 * a - b);
  LgElement t13 = LgElement::tau(1, 1, b);
  LgElement t22 = LgElement::tau(1, 1, a);
  LgElement t23 = LgElement::tau(2, 1, b);
  LgElement t33 = LgElement::tau(3, 1, 2 * b - 2 * a);
  t33.add(2, 0, 2 * a * b - b * b);
  set(1, 1, t11);
  set(1, 2, t12);
  set(1, 3, t13);
  set(2, 2, t22);
  set(2, 3, t23);
  set(3, 3, t33);
  return table;
}

LgElement lg24_multiply(const LgTable& table, const LgElement& x, const LgElement& y) {
  LgElement out;
  for (const auto& [kx, cx] : x.terms()) {
    for (const auto& [ky, cy] : y.terms()) {
      const auto& entry = table[static_cast<std::size_t>(kx.second)][static_cast<std::size_t>(ky.second)];
      for (const auto& [k, c] : entry.terms()) out.add(k.first + kx.first + ky.first, k.second, c * cx * cy);
    }
  }
  return out;
}

LgNonnegativity lg24_is_nonnegative(const Rational& a, const Rational& b) {
  const LgTable table = lg24_table(a, b);
  LgNonnegativity result;
  for (int i = 0; i < 4; ++i) {
    for (int j = i; j < 4; ++j) {
      for (const auto& [key, c] : table[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].terms()) {
        if (c < 0 && result.nonnegative) {
          result.nonnegative = false;
          result.witness = LgWitness{i, j, key.first, key.second, c};
        }
      }
    }
  }
  return result;
}

bool lg24_in_cone(const Rational& a, const Rational& b) { return a <= b && b <= 2 * a; }

bool lg24_associativity(const Rational& a, const Rational& b) {
  const LgTable table = lg24_table(a, b);
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      for (int l = 0; l < 4; ++l) {
        const auto ti = LgElement::tau(i), tj = LgElement::tau(j), tl = LgElement::tau(l);
        const auto left = lg24_multiply(table, lg24_multiply(table, ti, tj), tl);
        const auto right = lg24_multiply(table, ti, lg24_multiply(table, tj, tl));
        if (!(left == right)) return false;
      }
    }
  }
  return true;
}

bool is_change_of_basis(const Rational& a, const Rational& /*b*/) { return a == 1; }

bool lg24_classical_limit_holds(const Rational& a, const Rational& b) {
  const LgTable table = lg24_table(a, b);
  auto at_q0 = [](const LgElement& x) {
    LgElement out;
    for (const auto& [key, c] : x.terms())
      if (key.first == 0) out.add(0, key.second, c);
    return out;
  };
  for (int i = 1; i < 4; ++i) {
    for (int j = 1; j < 4; ++j) {
      LgElement expected;
      if (i + j == 2) expected = LgElement::tau(2, 0, 2);
      if (i + j == 3 && i != j) expected = LgElement::tau(3);
      if (!(at_q0(table[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) == expected)) return false;
    }
  }
  return true;
}

// --- permutations ----------------------------------------------------------

Permutation::Permutation(std::vector<int> values) : values_(std::move(values)) {
  std::vector<bool> seen(values_.size() + 1, false);
  for (int v : values_) {
    if (v < 1 || v > static_cast<int>(values_.size()) || seen[static_cast<std::size_t>(v)])
      throw std::invalid_argument("not a permutation of 1..n");
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> v;
  for (int i = 1; i <= n; ++i) v.push_back(i);
  return Permutation(std::move(v));
}

Permutation Permutation::seidel_generator(int n) {
  std::vector<int> v{n};
  for (int i = 1; i < n; ++i) v.push_back(i);
  return Permutation(std::move(v));
}

int Permutation::length() const {
  int inversions = 0;
  for (std::size_t i = 0; i < values_.size(); ++i)
    for (std::size_t j = i + 1; j < values_.size(); ++j)
      if (values_[i] > values_[j]) ++inversions;
  return inversions;
}

Permutation compose(const Permutation& u, const Permutation& w) {
  if (u.size() != w.size()) throw std::invalid_argument("permutations of different sizes");
  std::vector<int> out;
  for (int x : w.values()) out.push_back(u.values()[static_cast<std::size_t>(x - 1)]);
  return Permutation(std::move(out));
}

std::string to_string(const Permutation& w) {
  std::string out;
  const bool digits = w.size() <= 9;
  for (std::size_t i = 0; i < w.values().size(); ++i) {
    if (!digits && i) out += ',';
    out += std::to_string(w.values()[i]);
  }
  return out;
}

Permutation parse_permutation(std::string_view text) {
  std::vector<int> values;
  if (text.find(',') == std::string_view::npos) {
    for (char ch : text) {
      if (!std::isdigit(static_cast<unsigned char>(ch)) || ch == '0')
        throw std::invalid_argument("malformed permutation '" + std::string(text) + "'");
      values.push_back(ch - '0');
    }
  } else {
    std::size_t pos = 0;
    while (pos <= text.size()) {
      const auto comma = std::min(text.find(',', pos), text.size());
      const auto field = text.substr(pos, comma - pos);
      int v = 0;
      const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
      if (field.empty() || ec != std::errc{} || ptr != field.data() + field.size())
        throw std::invalid_argument("malformed permutation '" + std::string(text) + "'");
      values.push_back(v);
      pos = comma + 1;
    }
  }
  if (values.empty()) throw std::invalid_argument("empty permutation");
  try {
    return Permutation(std::move(values));
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("'" + std::string(text) + "' is not a permutation of 1..n");
  }
}

std::vector<FlagOrbitRow> flag_seidel_orbit(const Permutation& w, int n) {
  if (w.size() != n) throw std::invalid_argument("permutation is not on {1.." + std::to_string(n) + "}");
  const Permutation t = Permutation::seidel_generator(n);
  std::vector<FlagOrbitRow> rows;
  Permutation current = w;
  for (int r = 0; r < n; ++r) {
    rows.push_back({r, current, current.length()});
    current = compose(t, current);
  }
  return rows;
}

}  // namespace qschubert
