#include "qschubert/deform.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <stdexcept>
#include <thread>

#include "qschubert/seidel.hpp"

namespace qschubert {

namespace {

template <class R, class F>
std::vector<R> parallel_map(std::size_t count, unsigned jobs, F fn) {
  std::vector<R> out(count);
  if (jobs <= 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) out[i] = fn(i);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> workers;
  const unsigned threads = std::min<unsigned>(jobs, static_cast<unsigned>(count));
  for (unsigned t = 0; t < threads; ++t) {
    workers.emplace_back([&] {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= count) return;
        try {
          out[i] = fn(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& w : workers) w.join();
  if (failure) std::rethrow_exception(failure);
  return out;
}

Rational power(const Rational& base, int e) {
  Rational out = 1;
  for (int i = 0; i < e; ++i) out *= base;
  return out;
}

bool is_admissible(const Partition& lambda, const Partition& mu, const RingParams& params) {
  const int diff = lambda.weight() - mu.weight();
  return lambda.fits_in(params.box()) && mu.fits_in(params.box()) && diff > 0 && diff % params.n() == 0;
}

}  // namespace

std::vector<PartitionPair> admissible_pairs(const RingParams& params) {
  std::vector<PartitionPair> out;
  const auto basis = partitions_in_box(params.box());
  for (const auto& lambda : basis)
    for (const auto& mu : basis)
      if (is_admissible(lambda, mu, params)) out.emplace_back(lambda, mu);
  return out;
}

void DeformationCoeffs::set(const Partition& lambda, const Partition& mu, const Rational& value) {
  if (!is_admissible(lambda, mu, params_))
    throw std::invalid_argument("pair (" + to_string(lambda) + " ; " + to_string(mu) +
                                ") is not admissible: |lambda| - |mu| must be a positive multiple of n");
  if (value == 0)
    coeffs_.erase({lambda, mu});
  else
    coeffs_[{lambda, mu}] = value;
}

Rational DeformationCoeffs::get(const Partition& lambda, const Partition& mu) const {
  const auto it = coeffs_.find({lambda, mu});
  return it == coeffs_.end() ? Rational(0) : it->second;
}

QClass DeformationCoeffs::tau_in_sigma(const Partition& lambda) const {
  QClass out = QClass::basis(params_, lambda);
  // Keys are sorted by lambda, so the entries for this lambda are contiguous.
  for (auto it = coeffs_.lower_bound({lambda, Partition{}}); it != coeffs_.end() && it->first.first == lambda; ++it) {
    const Partition& mu = it->first.second;
    out.add((lambda.weight() - mu.weight()) / params_.n(), mu, it->second);
  }
  return out;
}

QClass DeformationCoeffs::tau_to_sigma(const QClass& in_tau) const {
  QClass out(params_);
  for (const auto& [t, c] : in_tau.terms()) out += tau_in_sigma(t.lambda).shifted_q(t.d) * c;
  return out;
}

QClass DeformationCoeffs::sigma_to_tau(const QClass& in_sigma) const {
  QClass work = in_sigma;
  QClass out(params_);
  // tau_lambda - sigma_lambda only involves strictly lighter partitions, so
  // peeling off the heaviest remaining term terminates.
  while (!work.is_zero()) {
    auto heaviest = work.terms().begin();
    for (auto it = work.terms().begin(); it != work.terms().end(); ++it) {
      if (it->first.lambda > heaviest->first.lambda) heaviest = it;
    }
    const Term t = heaviest->first;
    const Rational c = heaviest->second;
    out.add(t.d, t.lambda, c);
    work -= tau_in_sigma(t.lambda).shifted_q(t.d) * c;
  }
  return out;
}

DeformationCoeffs read_deformation_coeffs(std::istream& in, const RingParams& params) {
  DeformationCoeffs out(params);
  std::string line;
  int line_no = 0;
  std::set<PartitionPair> seen;
  auto trim = [](std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return std::string_view{};
    return s.substr(first, s.find_last_not_of(" \t\r") - first + 1);
  };
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view body = trim(line);
    if (body.empty() || body.front() == '#') continue;
    std::vector<std::string_view> fields;
    std::size_t pos = 0;
    for (;;) {
      const auto semi = body.find(';', pos);
      fields.push_back(trim(body.substr(pos, semi == std::string_view::npos ? std::string_view::npos : semi - pos)));
      if (semi == std::string_view::npos) break;
      pos = semi + 1;
    }
    try {
      if (fields.size() != 3) throw std::invalid_argument("expected '<lambda> ; <mu> ; <rational>'");
      const Partition lambda = parse_partition(fields[0]);
      const Partition mu = parse_partition(fields[1]);
      if (!seen.insert({lambda, mu}).second) throw std::invalid_argument("duplicate pair");
      out.set(lambda, mu, parse_rational(fields[2]));
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return out;
}

StructureConstantTable tau_structure_constants(const DeformationCoeffs& deformation) {
  const RingParams& params = deformation.params();
  StructureConstantTable table(params);
  const auto basis = partitions_in_box(params.box());
  std::vector<QClass> taus;
  for (const auto& lambda : basis) taus.push_back(deformation.tau_in_sigma(lambda));
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = 0; j < basis.size(); ++j) {
      const QClass product = deformation.sigma_to_tau(multiply(taus[i], taus[j]));
      for (const auto& [t, c] : product.terms()) table.set(StructureKey{t.d, basis[i], basis[j], t.lambda}, c);
    }
  }
  return table;
}

NegativityReport check_nonnegative(const DeformationCoeffs& deformation) {
  NegativityReport report;
  const StructureConstantTable table = tau_structure_constants(deformation);
  for (const auto& [key, value] : table.entries())
    if (value < 0) report.violations.push_back({key, value});
  return report;
}

bool CertificateReport::valid() const {
  if (branch == CertificateBranch::positive) {
    return std::all_of(positive_pairs.begin(), positive_pairs.end(), [](const auto& r) { return r.valid(); });
  }
  return std::all_of(classical_pairs.begin(), classical_pairs.end(), [](const auto& r) { return r.valid(); }) &&
         std::all_of(lex_max_claims.begin(), lex_max_claims.end(), [](const auto& c) { return c.holds; }) &&
         std::all_of(dual_product_claims.begin(), dual_product_claims.end(), [](const auto& c) { return c.holds; }) &&
         vanishing_failures.empty();
}

namespace {

// c_m^p sigma_lambda == (alpha q)^e sigma_{lambda shifted by p}, checked by Pieri.
bool seidel_power_identity(const Partition& lambda, int p, int e, const RingParams& params) {
  QClass x = QClass::basis(params, lambda);
  for (int i = 0; i < p; ++i) x = apply_chern(params.m, x);
  return x == QClass::basis(params, shift(lambda, p, params.box()), e, power(params.alpha, e));
}

PositivePairRecord certify_pair(const Partition& lambda, const Partition& mu, const RingParams& params) {
  const int m = params.m;
  const int n = params.n();
  const auto sep = find_separating_shift(lambda, mu, params.box());
  PositivePairRecord rec;
  rec.lambda = lambda;
  rec.mu = mu;
  rec.p = sep.p;
  rec.lambda_shift_weight = sep.lambda_weight;
  rec.mu_shift_weight = sep.mu_weight;
  const int d_num = m * sep.p + lambda.weight() - sep.lambda_weight;
  const int gap_num = lambda.weight() - mu.weight();
  const int mu_num = m * sep.p + mu.weight() - sep.mu_weight;
  rec.exponents_integral = d_num % n == 0 && gap_num % n == 0 && mu_num % n == 0 && d_num >= 0 && mu_num >= 0;
  rec.d = d_num / n;
  rec.e_prime = gap_num / n + mu_num / n;
  rec.seidel_identity = rec.exponents_integral && seidel_power_identity(lambda, sep.p, rec.d, params) &&
                        seidel_power_identity(mu, sep.p, mu_num / n, params);
  return rec;
}

Partition remove_first_column(const Partition& lambda) {
  std::vector<int> parts;
  for (int part : lambda.parts()) parts.push_back(part - 1);
  return Partition(std::move(parts));
}

LexMaxClaim lex_max_claim(const Partition& lambda, const RingParams& params) {
  LexMaxClaim claim;
  claim.lambda = lambda;
  claim.lambda_hat = remove_first_column(lambda);
  claim.column_length = static_cast<int>(lambda.length());
  // Classical Pieri: the in-box vertical strips, which is c_l sigma_{lambda hat} at alpha = 0.
  std::vector<Partition> strips;
  for (auto& mu : add_vertical_strips(claim.lambda_hat, claim.column_length, params.m))
    if (mu[0] <= params.k) strips.push_back(std::move(mu));
  claim.holds = !strips.empty() && *std::max_element(strips.begin(), strips.end()) == lambda;
  return claim;
}

}  // namespace

QClass dual_special_product(const Partition& nu, const Partition& mu, const RingParams& params) {
  const Partition dual = dual_partition(nu, params.box());
  QClass x = QClass::basis(params, mu);
  for (int part : dual.parts()) {
    x = apply_special(part, x);
    if (x.is_zero()) break;
  }
  return x;
}

CertificateReport certify_positive_branch(const RingParams& params, unsigned jobs) {
  if (params.alpha <= 0) throw std::invalid_argument("positive branch needs alpha > 0");
  CertificateReport report;
  report.branch = CertificateBranch::positive;
  report.params = params;
  const auto pairs = admissible_pairs(params);
  report.positive_pairs = parallel_map<PositivePairRecord>(
      pairs.size(), jobs, [&](std::size_t i) { return certify_pair(pairs[i].first, pairs[i].second, params); });
  return report;
}

CertificateReport certify_classical_branch(const RingParams& params, unsigned jobs) {
  if (params.alpha != 0) throw std::invalid_argument("classical branch needs alpha = 0");
  CertificateReport report;
  report.branch = CertificateBranch::classical;
  report.params = params;
  const auto basis = partitions_in_box(params.box());
  const QClass top = QClass::basis(params, Partition::rectangle(params.m, params.k));

  std::vector<Partition> nonempty(basis.begin() + 1, basis.end());
  report.lex_max_claims = parallel_map<LexMaxClaim>(nonempty.size(), jobs,
                                                    [&](std::size_t i) { return lex_max_claim(nonempty[i], params); });

  report.dual_product_claims = parallel_map<DualProductClaim>(basis.size(), jobs, [&](std::size_t i) {
    DualProductClaim claim;
    claim.nu = basis[i];
    claim.dual = dual_partition(basis[i], params.box());
    claim.holds = dual_special_product(basis[i], basis[i], params) == top;
    return claim;
  });

  // Vanishing families, one row of nu at a time.
  struct RowResult {
    std::size_t lex = 0;
    std::size_t degree = 0;
    std::vector<VanishingClaim> failures;
  };
  const auto rows = parallel_map<RowResult>(basis.size(), jobs, [&](std::size_t i) {
    RowResult row;
    const Partition& nu = basis[i];
    const Partition nu_dual = dual_partition(nu, params.box());
    for (const auto& mu : basis) {
      std::optional<VanishingClaim::Kind> kind;
      if (nu.weight() == mu.weight() && !(nu == mu) && lex_less(dual_partition(mu, params.box()), nu_dual))
        kind = VanishingClaim::Kind::lex;
      else if (nu.weight() < mu.weight())
        kind = VanishingClaim::Kind::degree;
      if (!kind) continue;
      (*kind == VanishingClaim::Kind::lex ? row.lex : row.degree) += 1;
      if (!dual_special_product(nu, mu, params).is_zero()) row.failures.push_back({*kind, nu, mu, false});
    }
    return row;
  });
  for (const auto& row : rows) {
    report.lex_vanishing_checked += row.lex;
    report.degree_vanishing_checked += row.degree;
    report.vanishing_failures.insert(report.vanishing_failures.end(), row.failures.begin(), row.failures.end());
  }

  std::map<Partition, bool> lex_ok;
  for (const auto& c : report.lex_max_claims) lex_ok[c.lambda] = c.holds;
  std::map<Partition, bool> dual_ok;
  for (const auto& c : report.dual_product_claims) dual_ok[c.nu] = c.holds;
  for (const auto& [lambda, mu] : admissible_pairs(params))
    report.classical_pairs.push_back({lambda, mu, lex_ok.at(lambda), dual_ok.at(mu)});
  return report;
}

}  // namespace qschubert
