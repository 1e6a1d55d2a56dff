// Acceptance run: one line per criterion, exit status 0 only if all pass.

#include <atomic>
#include <chrono>
#include <functional>
#include <iostream>
#include <mutex>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "qschubert/deform.hpp"
#include "qschubert/exhibits.hpp"
#include "qschubert/qring.hpp"
#include "qschubert/schur.hpp"
#include "qschubert/seidel.hpp"

using namespace qschubert;

namespace {

std::vector<RingParams> rings(int max_n, const Rational& alpha) {
  std::vector<RingParams> out;
  for (int n = 2; n <= max_n; ++n)
    for (int m = 1; m < n; ++m) out.emplace_back(m, n - m, alpha);
  return out;
}

Rational power(const Rational& base, int e) {
  Rational out = 1;
  for (int i = 0; i < e; ++i) out *= base;
  return out;
}

// Collects the first few failure messages; an empty log means success.
class Failures {
 public:
  void add(const std::string& message) {
    std::lock_guard lock(mutex_);
    if (messages_.size() < 5) messages_.push_back(message);
    ++count_;
  }
  bool empty() const { return count_ == 0; }
  std::string summary() const {
    std::ostringstream out;
    out << count_ << " failure(s)";
    for (const auto& m : messages_) out << "; " << m;
    return out.str();
  }

 private:
  std::mutex mutex_;
  std::vector<std::string> messages_;
  std::size_t count_ = 0;
};

template <class F>
void parallel_for(std::size_t count, F fn) {
  const unsigned threads = std::max(1u, std::thread::hardware_concurrency());
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) fn(i);
    });
  }
  for (auto& t : pool) t.join();
}

std::string label(const RingParams& p) { return to_string(p); }

// 1. Pieri products equal the ideal normal form.
std::string pieri_matches_oracle() {
  Failures failures;
  std::size_t products = 0;
  for (const Rational& alpha : {Rational(0), Rational(1), Rational(7, 3)}) {
    for (const auto& params : rings(7, alpha)) {
      const auto basis = partitions_in_box(params.box());
      std::vector<CPolynomial> polys;
      for (const auto& lambda : basis) polys.push_back(sigma_polynomial(lambda, params));
      products += basis.size() * basis.size();
      parallel_for(basis.size() * basis.size(), [&](std::size_t idx) {
        const std::size_t i = idx / basis.size(), j = idx % basis.size();
        if (multiply_basis(basis[i], basis[j], params) != normal_form(polys[i] * polys[j], params))
          failures.add(label(params) + " " + to_string(basis[i]) + "*" + to_string(basis[j]));
      });
    }
  }
  return failures.empty() ? "" : failures.summary();
}

// 2. Quantum Giambelli at alpha = 1.
std::string giambelli_holds() {
  Failures failures;
  for (const auto& params : rings(7, 1))
    for (const auto& lambda : partitions_in_box(params.box()))
      if (!giambelli_check(lambda, params)) failures.add(label(params) + " " + to_string(lambda));
  return failures.empty() ? "" : failures.summary();
}

// 3. Periodicity, weight sums, and the single-term c_m / sigma_k identities.
std::string seidel_laws() {
  Failures failures;
  for (const auto& params : rings(9, 1)) {
    const int n = params.n();
    for (const auto& lambda : partitions_in_box(params.box())) {
      if (shift(lambda, n, params.box()) != lambda) failures.add("period " + label(params) + " " + to_string(lambda));
      if (2 * orbit(lambda, params.box()).weight_sum() != params.k * params.m * n)
        failures.add("weight sum " + label(params) + " " + to_string(lambda));
      if (n > 7) continue;
      const Partition up = shift(lambda, 1, params.box());
      const Partition down = shift(lambda, -1, params.box());
      const int up_num = params.m + lambda.weight() - up.weight();
      const int down_num = params.k + lambda.weight() - down.weight();
      if (up_num < 0 || up_num % n != 0 ||
          pieri_chern(params.m, lambda, params) != QClass::basis(params, up, up_num / n, power(params.alpha, up_num / n)))
        failures.add("c_m " + label(params) + " " + to_string(lambda));
      if (down_num < 0 || down_num % n != 0 ||
          pieri_special(params.k, lambda, params) !=
              QClass::basis(params, down, down_num / n, power(params.alpha, down_num / n)))
        failures.add("sigma_k " + label(params) + " " + to_string(lambda));
    }
  }
  return failures.empty() ? "" : failures.summary();
}

// 4. Sign of the structure constants across alpha, and the rescaling law.
std::string positivity_cone() {
  Failures failures;
  for (const Rational& alpha : {Rational(0), Rational(1), Rational(5, 2)}) {
    for (const auto& params : rings(7, alpha)) {
      const auto table = full_structure_constants(params);
      for (const auto& [key, c] : table.entries())
        if (c < 0) failures.add("negative constant in " + label(params));
    }
  }
  for (const auto& params : rings(7, -1)) {
    std::vector<int> column(static_cast<std::size_t>(params.m), 1);
    if (pieri_chern(params.m, Partition({params.k}), params) != QClass::basis(params, Partition{}, 1, -1) ||
        multiply_basis(Partition(column), Partition({params.k}), params) != QClass::basis(params, Partition{}, 1, -1))
      failures.add("witness c_m sigma_k = -q in " + label(params));
  }
  for (const auto& base : rings(6, 1)) {
    const RingParams scaled(base.m, base.k, 3);
    const auto one = full_structure_constants(base);
    const auto three = full_structure_constants(scaled);
    if (one.entries().size() != three.entries().size()) failures.add("support differs in " + label(scaled));
    for (const auto& [key, c] : one.entries())
      if (three.at(key) != power(Rational(3), key.d) * c) failures.add("rescaling in " + label(scaled));
  }
  return failures.empty() ? "" : failures.summary();
}

// 5. Both certificate branches.
std::string uniqueness_certificates() {
  Failures failures;
  const unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
  std::size_t pairs = 0;
  for (const Rational& alpha : {Rational(1), Rational(7, 3)}) {
    for (const auto& params : rings(8, alpha)) {
      const auto report = certify_positive_branch(params, jobs);
      pairs += report.positive_pairs.size();
      if (report.positive_pairs.size() != admissible_pairs(params).size() || !report.valid())
        failures.add("positive " + label(params));
    }
  }
  for (const auto& params : rings(7, 0)) {
    const auto report = certify_classical_branch(params, jobs);
    if (report.classical_pairs.size() != admissible_pairs(params).size() || !report.valid())
      failures.add("classical " + label(params));
  }
  if (pairs == 0) failures.add("no admissible pairs examined");
  return failures.empty() ? "" : failures.summary();
}

// 6. The top-class perturbation in 2x2 at alpha = 1.
std::string desk_scale_instance() {
  Failures failures;
  const Partition e{}, v{1, 1}, top{2, 2};
  auto report_for = [](const Rational& t) {
    DeformationCoeffs d(RingParams(2, 2, 1));
    d.set(Partition({2, 2}), Partition{}, t);
    return check_nonnegative(d);
  };
  auto contains = [](const NegativityReport& r, const StructureKey& key, const Rational& value) {
    for (const auto& viol : r.violations)
      if (viol.key == key && viol.value == value) return true;
    return false;
  };
  for (const Rational& t : {Rational(1, 3), Rational(1, 2), Rational(1), Rational(2)})
    if (!contains(report_for(t), {1, v, v, e}, -t)) failures.add("t = " + to_string(t));
  for (const Rational& t : {Rational(-1, 3), Rational(-1, 2), Rational(-1), Rational(-2)})
    if (!contains(report_for(t), {1, top, top, top}, 2 * t)) failures.add("t = " + to_string(t));
  if (!report_for(0).nonnegative()) failures.add("t = 0 reported a violation");
  return failures.empty() ? "" : failures.summary();
}

// 7. The LG(2,4) family.
std::string lg24_reproduction() {
  Failures failures;
  std::mt19937_64 rng(20261014);
  auto random_rational = [&] {
    std::uniform_int_distribution<int> den(1, 9), num(-30, 30);
    Rational r(num(rng), den(rng));
    r.canonicalize();
    return r;
  };
  for (int sample = 0; sample < 50; ++sample) {
    const Rational a = random_rational(), b = random_rational();
    const LgTable t = lg24_table(a, b);
    LgElement t12 = LgElement::tau(3), t33 = LgElement::tau(3, 1, 2 * b - 2 * a);
    t12.add(1, 0, 2 * a - b);
    t33.add(2, 0, 2 * a * b - b * b);
    const bool formulas = t[1][1] == LgElement::tau(2, 0, 2) && t[1][2] == t12 && t[1][3] == LgElement::tau(1, 1, b) &&
                          t[2][2] == LgElement::tau(1, 1, a) && t[2][3] == LgElement::tau(2, 1, b) && t[3][3] == t33;
    if (!formulas) failures.add("table at a=" + to_string(a) + " b=" + to_string(b));
    if (!lg24_associativity(a, b)) failures.add("associativity at a=" + to_string(a) + " b=" + to_string(b));
  }
  for (int i = 0; i <= 40; ++i) {
    for (int j = 0; j <= 40; ++j) {
      Rational a(i - 20, 10), b(j - 20, 10);
      a.canonicalize();
      b.canonicalize();
      if (lg24_is_nonnegative(a, b).nonnegative != (a <= b && b <= 2 * a))
        failures.add("region at a=" + to_string(a) + " b=" + to_string(b));
    }
  }
  if (lg24_table(1, 1)[3][3] != LgElement::tau(0, 2)) failures.add("tau_3^2 at (1,1)");
  return failures.empty() ? "" : failures.summary();
}

// 8. The two Seidel orbits in GL(6)/B.
std::string flag_table() {
  Failures failures;
  struct Expected {
    std::string w;
    std::vector<std::string> perms;
    std::vector<int> lengths;
    int sum;
  };
  const std::vector<Expected> rows{
      {"123456", {"123456", "612345", "561234", "456123", "345612", "234561"}, {0, 5, 8, 9, 8, 5}, 35},
      {"321654", {"321654", "216543", "165432", "654321", "543216", "432165"}, {6, 7, 10, 15, 10, 7}, 55},
  };
  for (const auto& expected : rows) {
    const auto orbit_rows = flag_seidel_orbit(parse_permutation(expected.w), 6);
    int sum = 0;
    for (std::size_t r = 0; r < orbit_rows.size(); ++r) {
      sum += orbit_rows[r].length;
      if (to_string(orbit_rows[r].w) != expected.perms[r] || orbit_rows[r].length != expected.lengths[r])
        failures.add("row " + std::to_string(r) + " of " + expected.w);
    }
    if (orbit_rows.size() != 6 || sum != expected.sum) failures.add("sum for " + expected.w);
  }
  return failures.empty() ? "" : failures.summary();
}

// 9. Commutativity everywhere, associativity on random basis triples.
std::string algebra_axioms() {
  Failures failures;
  for (const Rational& alpha : {Rational(1), Rational(7, 3)}) {
    for (const auto& params : rings(7, alpha)) {
      const auto basis = partitions_in_box(params.box());
      for (const auto& lambda : basis)
        for (const auto& mu : basis)
          if (multiply_basis(lambda, mu, params) != multiply_basis(mu, lambda, params))
            failures.add("commutativity " + label(params));
    }
    std::mt19937_64 rng(6);
    for (const auto& params : rings(6, alpha)) {
      const auto basis = partitions_in_box(params.box());
      std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
      for (int trial = 0; trial < 200; ++trial) {
        const QClass x = QClass::basis(params, basis[pick(rng)]);
        const QClass y = QClass::basis(params, basis[pick(rng)]);
        const QClass z = QClass::basis(params, basis[pick(rng)]);
        if (multiply(multiply(x, y), z) != multiply(x, multiply(y, z))) failures.add("associativity " + label(params));
      }
    }
  }
  return failures.empty() ? "" : failures.summary();
}

struct Criterion {
  int id;
  std::string name;
  std::chrono::milliseconds limit;
  std::function<std::string()> check;
};

}  // namespace

int main() {
  using std::chrono::milliseconds;
  using std::chrono::minutes;
  using std::chrono::seconds;
  const std::vector<Criterion> criteria{
      {1, "Pieri/oracle equivalence", minutes(5), pieri_matches_oracle},
      {2, "quantum Giambelli", minutes(1), giambelli_holds},
      {3, "Seidel laws", minutes(1), seidel_laws},
      {4, "positivity cone", minutes(10), positivity_cone},
      {5, "uniqueness certificates", minutes(10), uniqueness_certificates},
      {6, "desk-scale instance", seconds(1), desk_scale_instance},
      {7, "LG(2,4) reproduction", seconds(10), lg24_reproduction},
      {8, "GL(6)/B table", seconds(1), flag_table},
      {9, "algebra axioms", minutes(2), algebra_axioms},
  };
  bool all = true;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string detail;
    try {
      detail = c.check();
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    const auto elapsed = std::chrono::duration_cast<milliseconds>(std::chrono::steady_clock::now() - start);
    if (detail.empty() && elapsed > c.limit)
      detail = "exceeded time limit of " + std::to_string(c.limit.count()) + " ms";
    const bool pass = detail.empty();
    all = all && pass;
    std::cout << (pass ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.name << " (" << elapsed.count()
              << " ms)" << (pass ? "" : " - " + detail) << std::endl;
  }
  return all ? 0 : 1;
}
