#include "qschubert/schur.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace qschubert {

Rational delta(const Partition& lambda, const RationalSequence& h) {
  const std::size_t size = lambda.length();
  return leibniz_determinant<Rational>(
      size,
      [&](std::size_t i, std::size_t j) {
        return h[lambda[i] + static_cast<int>(j) - static_cast<int>(i)];
      },
      [](const Rational& v) { return v == 0; }, Rational(1), Rational(0));
}

RationalSequence dual_sequence(const RationalSequence& h, std::size_t up_to) {
  std::vector<Rational> e(up_to);
  auto e_at = [&](std::size_t p) -> Rational { return p == 0 ? Rational(1) : e[p - 1]; };
  for (std::size_t p = 1; p <= up_to; ++p) {
    Rational sum = 0;
    for (std::size_t i = 1; i <= p; ++i) {
      const Rational term = h[static_cast<int>(i)] * e_at(p - i);
      if (i % 2 == 1)
        sum += term;
      else
        sum -= term;
    }
    e[p - 1] = sum;
  }
  return RationalSequence(std::move(e));
}

// ---------------------------------------------------------------------------
// CPolynomial

CPolynomial::CPolynomial(int m, int n) : m_(m), n_(n) {
  if (m < 1 || n < 1) throw std::invalid_argument("polynomial ring needs m >= 1 and n >= 1");
}

CPolynomial CPolynomial::constant(int m, int n, const Rational& value) {
  CPolynomial f(m, n);
  f.add_term(Exponents(static_cast<std::size_t>(m) + 1, 0), value);
  return f;
}

CPolynomial CPolynomial::c(int m, int n, int p) {
  if (p == 0) return constant(m, n, 1);
  CPolynomial f(m, n);
  if (p < 0 || p > m) return f;
  Exponents exps(static_cast<std::size_t>(m) + 1, 0);
  exps[static_cast<std::size_t>(p - 1)] = 1;
  f.add_term(exps, 1);
  return f;
}

CPolynomial CPolynomial::q(int m, int n) {
  CPolynomial f(m, n);
  Exponents exps(static_cast<std::size_t>(m) + 1, 0);
  exps.back() = 1;
  f.add_term(exps, 1);
  return f;
}

void CPolynomial::add_term(const Exponents& exps, const Rational& coeff) {
  if (exps.size() != static_cast<std::size_t>(m_) + 1) throw std::invalid_argument("exponent vector has wrong size");
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(exps, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

int CPolynomial::degree(const Exponents& exps) const {
  int deg = 0;
  for (int i = 0; i < m_; ++i) deg += (i + 1) * exps[static_cast<std::size_t>(i)];
  return deg + n_ * exps.back();
}

std::map<int, CPolynomial> CPolynomial::homogeneous_components() const {
  std::map<int, CPolynomial> out;
  for (const auto& [exps, coeff] : terms_) {
    auto it = out.try_emplace(degree(exps), m_, n_).first;
    it->second.add_term(exps, coeff);
  }
  return out;
}

CPolynomial& CPolynomial::operator+=(const CPolynomial& other) {
  if (other.m_ != m_ || other.n_ != n_) throw std::invalid_argument("polynomial rings differ");
  for (const auto& [exps, coeff] : other.terms_) add_term(exps, coeff);
  return *this;
}

CPolynomial& CPolynomial::operator-=(const CPolynomial& other) {
  if (other.m_ != m_ || other.n_ != n_) throw std::invalid_argument("polynomial rings differ");
  for (const auto& [exps, coeff] : other.terms_) add_term(exps, -coeff);
  return *this;
}

CPolynomial& CPolynomial::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [exps, coeff] : terms_) coeff *= scalar;
  return *this;
}

CPolynomial operator*(const CPolynomial& a, const CPolynomial& b) {
  if (a.m_ != b.m_ || a.n_ != b.n_) throw std::invalid_argument("polynomial rings differ");
  CPolynomial out(a.m_, a.n_);
  CPolynomial::Exponents exps(static_cast<std::size_t>(a.m_) + 1);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < exps.size(); ++i) exps[i] = ea[i] + eb[i];
      out.add_term(exps, ca * cb);
    }
  }
  return out;
}

std::string CPolynomial::debug_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  // Highest degree first, lexicographically largest exponents first within a degree.
  std::vector<std::pair<Exponents, Rational>> ordered(terms_.begin(), terms_.end());
  std::stable_sort(ordered.begin(), ordered.end(), [&](const auto& x, const auto& y) {
    const int dx = degree(x.first), dy = degree(y.first);
    if (dx != dy) return dx > dy;
    return x.first > y.first;
  });
  for (const auto& [exps, coeff] : ordered) {
    const bool negative = coeff < 0;
    if (first)
      out += negative ? "−" : "";
    else
      out += negative ? " − " : " + ";
    const Rational mag = abs(coeff);
    std::vector<std::string> factors;
    for (int i = 0; i <= m_; ++i) {
      const int e = exps[static_cast<std::size_t>(i)];
      if (e == 0) continue;
      std::string name = i == m_ ? "q" : "c" + std::to_string(i + 1);
      if (e > 1) name += "^" + std::to_string(e);
      factors.push_back(std::move(name));
    }
    std::string body;
    if (mag != 1 || factors.empty()) body = to_string(mag);
    for (const auto& f : factors) body += (body.empty() ? "" : "·") + f;
    out += body;
    first = false;
  }
  return out;
}

CPolynomial sigma_polynomial(const Partition& lambda, const RingParams& params) {
  const int m = params.m;
  const int n = params.n();
  const Partition conj = conjugate(lambda);
  const CPolynomial one = CPolynomial::constant(m, n, 1);
  const CPolynomial zero(m, n);
  return leibniz_determinant<CPolynomial>(
      conj.length(),
      [&](std::size_t i, std::size_t j) {
        return CPolynomial::c(m, n, conj[i] + static_cast<int>(j) - static_cast<int>(i));
      },
      [](const CPolynomial& f) { return f.is_zero(); }, one, zero);
}

CPolynomial special_sigma_polynomial(int p, const RingParams& params) {
  const int m = params.m;
  const int n = params.n();
  if (p < 0) return CPolynomial(m, n);
  std::vector<CPolynomial> sigma;
  sigma.reserve(static_cast<std::size_t>(p) + 1);
  sigma.push_back(CPolynomial::constant(m, n, 1));
  for (int s = 1; s <= p; ++s) {
    CPolynomial next(m, n);
    for (int i = 1; i <= std::min(s, m); ++i) {
      CPolynomial term = CPolynomial::c(m, n, i) * sigma[static_cast<std::size_t>(s - i)];
      if (i % 2 == 1)
        next += term;
      else
        next -= term;
    }
    sigma.push_back(std::move(next));
  }
  return sigma.back();
}

// ---------------------------------------------------------------------------
// Sparse exact elimination

namespace {

using SparseRow = std::map<int, Rational>;

void subtract_scaled(SparseRow& target, const Rational& factor, const SparseRow& row) {
  for (const auto& [col, value] : row) {
    auto [it, inserted] = target.try_emplace(col, 0);
    it->second -= factor * value;
    if (it->second == 0) target.erase(it);
  }
}

// Rows with pairwise distinct leading columns; each row has leading entry 1
// and no entries to the left of it.
struct Echelon {
  std::map<int, SparseRow> pivots;

  // Removes every pivot column from v, in ascending column order.
  void reduce(SparseRow& v) const {
    auto it = v.begin();
    while (it != v.end()) {
      const int col = it->first;
      const auto piv = pivots.find(col);
      if (piv == pivots.end()) {
        ++it;
        continue;
      }
      const Rational factor = it->second;
      subtract_scaled(v, factor, piv->second);
      it = v.upper_bound(col);
    }
  }

  bool insert(SparseRow v) {
    reduce(v);
    if (v.empty()) return false;
    const Rational lead = v.begin()->second;
    for (auto& [col, value] : v) value /= lead;
    const int col = v.begin()->first;
    pivots.emplace(col, std::move(v));
    return true;
  }
};

// Pivot rows paired with the combination of basis indices that produced them.
struct TrackedEchelon {
  struct Row {
    SparseRow values;
    SparseRow combination;
  };
  std::map<int, Row> pivots;

  void reduce(SparseRow& v, SparseRow& combination) const {
    auto it = v.begin();
    while (it != v.end()) {
      const int col = it->first;
      const auto piv = pivots.find(col);
      if (piv == pivots.end()) {
        ++it;
        continue;
      }
      const Rational factor = it->second;
      subtract_scaled(v, factor, piv->second.values);
      subtract_scaled(combination, factor, piv->second.combination);
      it = v.upper_bound(col);
    }
  }
};

void monomials_rec(int var, int remaining, int m, int n, std::vector<int>& exps,
                   std::vector<CPolynomial::Exponents>& out) {
  // var == m is q, with weight n; var < m is c_{var+1}.
  const int weight = var == m ? n : var + 1;
  if (var == m) {
    if (remaining % weight == 0) {
      exps[static_cast<std::size_t>(var)] = remaining / weight;
      out.push_back(exps);
      exps[static_cast<std::size_t>(var)] = 0;
    }
    return;
  }
  for (int e = 0; e * weight <= remaining; ++e) {
    exps[static_cast<std::size_t>(var)] = e;
    monomials_rec(var + 1, remaining - e * weight, m, n, exps, out);
  }
  exps[static_cast<std::size_t>(var)] = 0;
}

std::vector<CPolynomial::Exponents> monomials_of_degree(int degree, int m, int n) {
  std::vector<CPolynomial::Exponents> out;
  if (degree < 0) return out;
  std::vector<int> exps(static_cast<std::size_t>(m) + 1, 0);
  monomials_rec(0, degree, m, n, exps, out);
  // Column order: descending lexicographic on exponent vectors (q last).
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

}  // namespace

std::size_t polynomial_rank(std::span<const CPolynomial> polys) {
  std::map<CPolynomial::Exponents, int> index;
  Echelon echelon;
  std::size_t rank = 0;
  for (const auto& f : polys) {
    SparseRow row;
    for (const auto& [exps, coeff] : f.terms()) {
      auto it = index.try_emplace(exps, static_cast<int>(index.size())).first;
      row[it->second] = coeff;
    }
    if (echelon.insert(std::move(row))) ++rank;
  }
  return rank;
}

// ---------------------------------------------------------------------------
// IdealNormalForm

struct IdealNormalForm::Slice {
  std::map<CPolynomial::Exponents, int> column;
  std::vector<Term> labels;
  Echelon ideal;
  TrackedEchelon basis;
};

IdealNormalForm::IdealNormalForm(RingParams params) : params_(std::move(params)) {
  const int k = params_.k;
  const int n = params_.n();
  for (int p = k + 1; p < n; ++p) generators_.push_back(special_sigma_polynomial(p, params_));
  CPolynomial top = special_sigma_polynomial(n, params_);
  const Rational sign = params_.m % 2 == 0 ? Rational(1) : Rational(-1);
  top += CPolynomial::q(params_.m, n) * (sign * params_.alpha);
  generators_.push_back(std::move(top));
}

IdealNormalForm::~IdealNormalForm() = default;

int IdealNormalForm::default_degree_cap() const {
  return std::max(3 * params_.n(), 2 * params_.m * params_.k);
}

std::shared_ptr<const IdealNormalForm::Slice> IdealNormalForm::build_slice(int degree) const {
  const int m = params_.m;
  const int n = params_.n();
  auto slice = std::make_shared<Slice>();
  const auto monomials = monomials_of_degree(degree, m, n);
  for (std::size_t i = 0; i < monomials.size(); ++i) slice->column.emplace(monomials[i], static_cast<int>(i));

  auto to_row = [&](const CPolynomial& f) {
    SparseRow row;
    for (const auto& [exps, coeff] : f.terms()) {
      const auto it = slice->column.find(exps);
      if (it == slice->column.end()) throw InternalError("polynomial term outside its degree slice");
      row[it->second] = coeff;
    }
    return row;
  };

  for (const auto& gen : generators_) {
    const auto components = gen.homogeneous_components();
    const int gen_degree = components.begin()->first;
    for (const auto& mono : monomials_of_degree(degree - gen_degree, m, n)) {
      CPolynomial mult(m, n);
      mult.add_term(mono, 1);
      slice->ideal.insert(to_row(mult * gen));
    }
  }

  // Basis q^d sigma_lambda with d n + |lambda| = degree.
  const BoxBound box = params_.box();
  for (const auto& lambda : partitions_in_box(box)) {
    const int rest = degree - lambda.weight();
    if (rest < 0 || rest % n != 0) continue;
    const int d = rest / n;
    CPolynomial image = sigma_polynomial(lambda, params_);
    for (int i = 0; i < d; ++i) image = image * CPolynomial::q(m, n);
    SparseRow values = to_row(image);
    slice->ideal.reduce(values);
    SparseRow combination;
    combination[static_cast<int>(slice->labels.size())] = 1;
    slice->labels.push_back(Term{d, lambda});
    slice->basis.reduce(values, combination);
    if (values.empty())
      throw InternalError("basis classes are linearly dependent modulo the ideal in degree " + std::to_string(degree));
    const Rational lead = values.begin()->second;
    for (auto& [col, v] : values) v /= lead;
    for (auto& [col, v] : combination) v /= lead;
    const int col = values.begin()->first;
    slice->basis.pivots.emplace(col, TrackedEchelon::Row{std::move(values), std::move(combination)});
  }

  const std::size_t quotient_dim = monomials.size() - slice->ideal.pivots.size();
  if (quotient_dim != slice->labels.size())
    throw InternalError("basis does not span the quotient in degree " + std::to_string(degree));
  return slice;
}

std::shared_ptr<const IdealNormalForm::Slice> IdealNormalForm::slice(int degree) const {
  {
    std::shared_lock lock(mutex_);
    const auto it = slices_.find(degree);
    if (it != slices_.end()) return it->second;
  }
  auto built = build_slice(degree);
  std::unique_lock lock(mutex_);
  return slices_.try_emplace(degree, std::move(built)).first->second;
}

std::size_t IdealNormalForm::slice_dimension(int degree) const { return slice(degree)->labels.size(); }

QClass IdealNormalForm::reduce(const CPolynomial& f, std::optional<int> degree_cap) const {
  if (f.num_c() != params_.m || f.q_degree_weight() != params_.n())
    throw std::invalid_argument("polynomial does not belong to this ring");
  const int cap = degree_cap.value_or(default_degree_cap());
  QClass out(params_);
  for (const auto& [degree, component] : f.homogeneous_components()) {
    if (degree > cap)
      throw std::invalid_argument("degree " + std::to_string(degree) + " exceeds the cap " + std::to_string(cap));
    const auto s = slice(degree);
    SparseRow values;
    for (const auto& [exps, coeff] : component.terms()) values[s->column.at(exps)] = coeff;
    s->ideal.reduce(values);
    SparseRow combination;
    s->basis.reduce(values, combination);
    if (!values.empty()) throw InternalError("inconsistent normal-form system in degree " + std::to_string(degree));
    // values_before = sum over pivots of factor * row, and combination holds
    // minus the accumulated basis coefficients.
    for (const auto& [index, coeff] : combination) {
      const Term& t = s->labels[static_cast<std::size_t>(index)];
      out.add(t.d, t.lambda, -coeff);
    }
  }
  return out;
}

namespace {

struct OracleRegistry {
  std::shared_mutex mutex;
  std::map<std::tuple<int, int, Rational>, std::unique_ptr<IdealNormalForm>> oracles;
};

OracleRegistry& registry() {
  static OracleRegistry instance;
  return instance;
}

}  // namespace

const IdealNormalForm& oracle_for(const RingParams& params) {
  auto& reg = registry();
  const auto key = std::make_tuple(params.m, params.k, params.alpha);
  {
    std::shared_lock lock(reg.mutex);
    const auto it = reg.oracles.find(key);
    if (it != reg.oracles.end()) return *it->second;
  }
  std::unique_lock lock(reg.mutex);
  auto& slot = reg.oracles[key];
  if (!slot) slot = std::make_unique<IdealNormalForm>(params);
  return *slot;
}

QClass normal_form(const CPolynomial& f, const RingParams& params, std::optional<int> degree_cap) {
  return oracle_for(params).reduce(f, degree_cap);
}

}  // namespace qschubert
