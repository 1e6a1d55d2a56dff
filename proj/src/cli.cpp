#include "qschubert/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <json.hpp>
#include <optional>
#include <stdexcept>

#include "qschubert/deform.hpp"
#include "qschubert/exhibits.hpp"
#include "qschubert/partition.hpp"
#include "qschubert/qring.hpp"
#include "qschubert/schur.hpp"
#include "qschubert/seidel.hpp"

namespace qschubert::cli {

namespace {

using nlohmann::json;

json to_json(const Partition& lambda) { return json(std::vector<int>(lambda.parts().begin(), lambda.parts().end())); }

json to_json(const QClass& x) {
  json out = json::array();
  for (const auto& [t, c] : x.terms()) out.push_back({{"d", t.d}, {"lambda", to_json(t.lambda)}, {"coeff", to_string(c)}});
  return out;
}

json ring_json(const RingParams& params) {
  return {{"m", params.m}, {"k", params.k}, {"alpha", to_string(params.alpha)}};
}

json key_json(const StructureKey& key) {
  return {{"d", key.d}, {"lambda", to_json(key.lambda)}, {"mu", to_json(key.mu)}, {"nu", to_json(key.nu)}};
}

std::string key_text(const StructureKey& key) {
  return "d=" + std::to_string(key.d) + " lambda=" + to_string(key.lambda) + " mu=" + to_string(key.mu) +
         " nu=" + to_string(key.nu);
}

Partition parse_in_box(const std::string& text, const RingParams& params) {
  Partition lambda = parse_partition(text);
  if (!lambda.fits_in(params.box()))
    throw std::invalid_argument("partition " + text + " does not fit in " + std::to_string(params.m) + "x" +
                                std::to_string(params.k));
  return lambda;
}

void emit(std::ostream& out, const json& doc) { out << doc.dump(2) << '\n'; }

struct RingOptions {
  int m = 0;
  int k = 0;
  std::string alpha = "1";

  void attach(CLI::App* app, bool with_alpha) {
    app->add_option("--m", m, "rows of the box")->required()->check(CLI::PositiveNumber);
    app->add_option("--k", k, "columns of the box")->required()->check(CLI::PositiveNumber);
    if (with_alpha) app->add_option("--alpha", alpha, "deformation parameter, e.g. 7/3")->capture_default_str();
  }
  RingParams params() const { return RingParams(m, k, parse_rational(alpha)); }
};

struct Options {
  bool json = false;

  RingOptions multiply_ring;
  std::string multiply_lambda, multiply_mu;
  bool check_oracle = false;
  std::optional<int> degree_cap;

  RingOptions pieri_ring;
  std::optional<int> pieri_chern, pieri_special;
  std::string pieri_lambda;

  RingOptions giambelli_ring;
  std::optional<std::string> giambelli_lambda;

  RingOptions constants_ring;
  std::optional<int> max_degree;

  RingOptions orbit_ring;
  std::string orbit_lambda;

  RingOptions separate_ring;
  std::string separate_lambda, separate_mu;

  RingOptions certify_ring;
  std::string branch;
  unsigned jobs = 1;

  RingOptions deform_ring;
  std::string coeffs_path;

  std::string lg_a, lg_b;
  bool check_region = false;
  bool check_assoc = false;

  int flags_n = 0;
  std::string flags_w;
};

int cmd_multiply(const Options& o, std::ostream& out) {
  const RingParams params = o.multiply_ring.params();
  const Partition lambda = parse_in_box(o.multiply_lambda, params);
  const Partition mu = parse_in_box(o.multiply_mu, params);
  const QClass product = multiply_basis(lambda, mu, params);
  std::optional<QClass> oracle;
  if (o.check_oracle) {
    if (o.degree_cap && *o.degree_cap < 0) throw std::invalid_argument("--degree-cap must be non-negative");
    oracle = normal_form(sigma_polynomial(lambda, params) * sigma_polynomial(mu, params), params, o.degree_cap);
  }
  const bool agree = !oracle || *oracle == product;
  if (o.json) {
    json doc{{"ring", ring_json(params)}, {"lambda", to_json(lambda)}, {"mu", to_json(mu)}, {"product", to_json(product)}};
    if (oracle) doc["oracle"] = {{"normal_form", to_json(*oracle)}, {"agree", agree}};
    emit(out, doc);
  } else {
    out << to_string(product) << '\n';
    if (oracle) out << (agree ? std::string("oracle: agree") : "oracle: DISAGREE " + to_string(*oracle)) << '\n';
  }
  return agree ? kExitOk : kExitFailed;
}

int cmd_pieri(const Options& o, std::ostream& out) {
  if (o.pieri_chern.has_value() == o.pieri_special.has_value())
    throw std::invalid_argument("exactly one of --chern or --special is required");
  const RingParams params = o.pieri_ring.params();
  const Partition lambda = parse_in_box(o.pieri_lambda, params);
  const bool chern = o.pieri_chern.has_value();
  const int p = chern ? *o.pieri_chern : *o.pieri_special;
  const QClass result = chern ? pieri_chern(p, lambda, params) : pieri_special(p, lambda, params);
  if (o.json)
    emit(out, {{"ring", ring_json(params)},
               {"factor", chern ? "chern" : "special"},
               {"p", p},
               {"lambda", to_json(lambda)},
               {"product", to_json(result)}});
  else
    out << to_string(result) << '\n';
  return kExitOk;
}

int cmd_giambelli(const Options& o, std::ostream& out) {
  const RingParams params = o.giambelli_ring.params();
  std::vector<Partition> targets;
  if (o.giambelli_lambda)
    targets.push_back(parse_in_box(*o.giambelli_lambda, params));
  else
    targets = partitions_in_box(params.box());
  json results = json::array();
  std::size_t passed = 0;
  for (const auto& lambda : targets) {
    const bool ok = giambelli_check(lambda, params);
    passed += ok ? 1 : 0;
    if (o.json)
      results.push_back({{"lambda", to_json(lambda)}, {"pass", ok}});
    else
      out << to_string(lambda) << (ok ? " pass" : " FAIL") << '\n';
  }
  if (o.json)
    emit(out, {{"ring", ring_json(params)}, {"results", results}, {"passed", passed}, {"total", targets.size()}});
  else
    out << "passed " << passed << '/' << targets.size() << '\n';
  return passed == targets.size() ? kExitOk : kExitFailed;
}

int cmd_constants(const Options& o, std::ostream& out) {
  const RingParams params = o.constants_ring.params();
  if (o.max_degree && *o.max_degree < 0) throw std::invalid_argument("--max-degree must be non-negative");
  const auto table = full_structure_constants(params, o.max_degree.value_or(-1));
  if (o.json) {
    json rows = json::array();
    for (const auto& [key, c] : table.entries()) {
      json row = key_json(key);
      row["coeff"] = to_string(c);
      rows.push_back(std::move(row));
    }
    emit(out, {{"ring", ring_json(params)}, {"constants", rows}});
  } else {
    for (const auto& [key, c] : table.entries()) out << key_text(key) << " coeff=" << to_string(c) << '\n';
  }
  return kExitOk;
}

int cmd_orbit(const Options& o, std::ostream& out) {
  const RingParams params(o.orbit_ring.m, o.orbit_ring.k);
  const SeidelOrbit result = orbit(parse_in_box(o.orbit_lambda, params), params.box());
  const int expected = params.k * params.m * params.n() / 2;
  if (o.json) {
    json shifts = json::array();
    for (const auto& s : result.shifts()) shifts.push_back(to_json(s));
    emit(out, {{"m", params.m},
               {"k", params.k},
               {"shifts", shifts},
               {"weights", result.weights()},
               {"sum", result.weight_sum()},
               {"expected_sum", expected}});
  } else {
    for (std::size_t r = 0; r < result.shifts().size(); ++r) out << r << ' ' << to_string(result.shifts()[r]) << '\n';
    out << "weights";
    for (int w : result.weights()) out << ' ' << w;
    out << "\nsum=" << result.weight_sum() << '\n';
  }
  return result.weight_sum() == expected ? kExitOk : kExitFailed;
}

int cmd_separate(const Options& o, std::ostream& out) {
  const RingParams params(o.separate_ring.m, o.separate_ring.k);
  const Partition lambda = parse_in_box(o.separate_lambda, params);
  const Partition mu = parse_in_box(o.separate_mu, params);
  const SeparatingShift sep = find_separating_shift(lambda, mu, params.box());
  if (o.json)
    emit(out, {{"m", params.m},
               {"k", params.k},
               {"lambda", to_json(lambda)},
               {"mu", to_json(mu)},
               {"p", sep.p},
               {"lambda_shift_weight", sep.lambda_weight},
               {"mu_shift_weight", sep.mu_weight}});
  else
    out << "p=" << sep.p << " lambda_shift_weight=" << sep.lambda_weight << " mu_shift_weight=" << sep.mu_weight
        << '\n';
  return kExitOk;
}

int cmd_certify(const Options& o, std::ostream& out) {
  const RingParams params = o.certify_ring.params();
  const unsigned jobs = std::max(1u, o.jobs);
  const bool positive = o.branch == "positive";
  const CertificateReport report =
      positive ? certify_positive_branch(params, jobs) : certify_classical_branch(params, jobs);
  const bool valid = report.valid();
  if (o.json) {
    json doc{{"ring", ring_json(params)}, {"branch", o.branch}, {"valid", valid}};
    json pairs = json::array();
    if (positive) {
      for (const auto& r : report.positive_pairs)
        pairs.push_back({{"lambda", to_json(r.lambda)},
                         {"mu", to_json(r.mu)},
                         {"p", r.p},
                         {"lambda_shift_weight", r.lambda_shift_weight},
                         {"mu_shift_weight", r.mu_shift_weight},
                         {"d", r.d},
                         {"e_prime", r.e_prime},
                         {"exponents_integral", r.exponents_integral},
                         {"seidel_identity", r.seidel_identity},
                         {"valid", r.valid()}});
    } else {
      for (const auto& r : report.classical_pairs)
        pairs.push_back({{"lambda", to_json(r.lambda)},
                         {"mu", to_json(r.mu)},
                         {"lex_max", r.lex_max},
                         {"dual_product", r.dual_product},
                         {"valid", r.valid()}});
      json failures = json::array();
      for (const auto& f : report.vanishing_failures)
        failures.push_back({{"kind", f.kind == VanishingClaim::Kind::lex ? "lex" : "degree"},
                            {"nu", to_json(f.nu)},
                            {"mu", to_json(f.mu)}});
      const auto lex_ok = std::count_if(report.lex_max_claims.begin(), report.lex_max_claims.end(),
                                        [](const auto& c) { return c.holds; });
      const auto dual_ok = std::count_if(report.dual_product_claims.begin(), report.dual_product_claims.end(),
                                         [](const auto& c) { return c.holds; });
      doc["claims"] = {{"lex_max", {{"holding", lex_ok}, {"total", report.lex_max_claims.size()}}},
                       {"dual_product", {{"holding", dual_ok}, {"total", report.dual_product_claims.size()}}},
                       {"lex_vanishing_checked", report.lex_vanishing_checked},
                       {"degree_vanishing_checked", report.degree_vanishing_checked},
                       {"vanishing_failures", failures}};
    }
    doc["pairs"] = pairs;
    emit(out, doc);
    return valid ? kExitOk : kExitFailed;
  }

  out << "branch " << o.branch << ' ' << to_string(params) << '\n';
  std::size_t pairs_ok = 0;
  if (positive) {
    for (const auto& r : report.positive_pairs) {
      pairs_ok += r.valid() ? 1 : 0;
      out << "pair " << to_string(r.lambda) << " ; " << to_string(r.mu) << " p=" << r.p << " d=" << r.d
          << " e'=" << r.e_prime << (r.valid() ? " ok" : " FAIL") << '\n';
    }
    out << "pairs " << pairs_ok << '/' << report.positive_pairs.size() << " valid\n";
  } else {
    for (const auto& c : report.lex_max_claims)
      if (!c.holds) out << "lex-max FAIL " << to_string(c.lambda) << '\n';
    for (const auto& c : report.dual_product_claims)
      if (!c.holds) out << "dual-product FAIL " << to_string(c.nu) << '\n';
    for (const auto& f : report.vanishing_failures)
      out << (f.kind == VanishingClaim::Kind::lex ? "lex-vanishing" : "degree-vanishing") << " FAIL nu="
          << to_string(f.nu) << " mu=" << to_string(f.mu) << '\n';
    for (const auto& r : report.classical_pairs) {
      pairs_ok += r.valid() ? 1 : 0;
      out << "pair " << to_string(r.lambda) << " ; " << to_string(r.mu) << (r.valid() ? " ok" : " FAIL") << '\n';
    }
    out << "lex-max claims " << report.lex_max_claims.size() << ", dual-product claims "
        << report.dual_product_claims.size() << ", vanishing checks "
        << report.lex_vanishing_checked + report.degree_vanishing_checked << '\n';
    out << "pairs " << pairs_ok << '/' << report.classical_pairs.size() << " valid\n";
  }
  out << (valid ? "certificate valid" : "certificate INVALID") << '\n';
  return valid ? kExitOk : kExitFailed;
}

int cmd_deform_check(const Options& o, std::ostream& out) {
  const RingParams params = o.deform_ring.params();
  std::ifstream in(o.coeffs_path);
  if (!in) throw std::invalid_argument("cannot read coefficient file " + o.coeffs_path);
  const DeformationCoeffs coeffs = read_deformation_coeffs(in, params);
  const NegativityReport report = check_nonnegative(coeffs);
  if (o.json) {
    json rows = json::array();
    for (const auto& v : report.violations) {
      json row = key_json(v.key);
      row["value"] = to_string(v.value);
      rows.push_back(std::move(row));
    }
    emit(out, {{"ring", ring_json(params)}, {"nonnegative", report.nonnegative()}, {"violations", rows}});
  } else {
    for (const auto& v : report.violations) out << key_text(v.key) << " value=" << to_string(v.value) << '\n';
    if (report.nonnegative())
      out << "nonnegative\n";
    else
      out << "violations " << report.violations.size() << '\n';
  }
  return report.nonnegative() ? kExitOk : kExitFailed;
}

int cmd_lg24(const Options& o, std::ostream& out) {
  const Rational a = parse_rational(o.lg_a);
  const Rational b = parse_rational(o.lg_b);
  const LgTable table = lg24_table(a, b);
  bool ok = true;
  json doc{{"a", to_string(a)}, {"b", to_string(b)}};
  json products = json::array();
  for (int i = 1; i < 4; ++i) {
    for (int j = i; j < 4; ++j) {
      const LgElement& entry = table[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      if (o.json) {
        json terms = json::array();
        for (const auto& [key, c] : entry.terms())
          terms.push_back({{"d", key.first}, {"w", key.second}, {"coeff", to_string(c)}});
        products.push_back({{"i", i}, {"j", j}, {"terms", terms}});
      } else {
        out << 't' << i << "*t" << j << " = " << to_string(entry) << '\n';
      }
    }
  }
  doc["products"] = products;
  if (o.check_region) {
    const LgNonnegativity result = lg24_is_nonnegative(a, b);
    const bool cone = lg24_in_cone(a, b);
    ok = ok && result.nonnegative && cone;
    json region{{"nonnegative", result.nonnegative}, {"in_cone", cone}};
    if (result.witness) {
      const auto& w = *result.witness;
      region["witness"] = {{"i", w.i}, {"j", w.j}, {"d", w.d}, {"w", w.w}, {"value", to_string(w.value)}};
    }
    doc["region"] = region;
    if (!o.json) {
      out << "nonnegative " << (result.nonnegative ? "true" : "false") << '\n';
      out << "cone " << (cone ? "true" : "false") << '\n';
      if (result.witness) {
        const auto& w = *result.witness;
        out << "witness t" << w.i << "*t" << w.j << " term " << to_string(LgElement::tau(w.w, w.d)) << " coeff "
            << to_string(w.value) << '\n';
      }
    }
  }
  if (o.check_assoc) {
    const bool assoc = lg24_associativity(a, b);
    ok = ok && assoc;
    doc["associative"] = assoc;
    if (!o.json) out << "associative " << (assoc ? "true" : "false") << '\n';
  }
  if (o.json) emit(out, doc);
  return ok ? kExitOk : kExitFailed;
}

int cmd_flags(const Options& o, std::ostream& out) {
  const Permutation w = parse_permutation(o.flags_w);
  const auto rows = flag_seidel_orbit(w, o.flags_n);
  int sum = 0;
  for (const auto& row : rows) sum += row.length;
  if (o.json) {
    json items = json::array();
    for (const auto& row : rows) items.push_back({{"r", row.r}, {"w", to_string(row.w)}, {"length", row.length}});
    emit(out, {{"n", o.flags_n}, {"rows", items}, {"sum", sum}});
  } else {
    for (const auto& row : rows) out << row.r << ' ' << to_string(row.w) << ' ' << row.length << '\n';
    out << "sum=" << sum << '\n';
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact computations in the quantum cohomology rings QH_alpha of Grassmannians", "qschubert"};
  app.require_subcommand(1);
  app.add_flag("--json", o.json, "emit JSON");

  auto json_flag = [&](CLI::App* sub) { sub->add_flag("--json", o.json, "emit JSON"); };

  auto* multiply = app.add_subcommand("multiply", "expand sigma_lambda * sigma_mu");
  o.multiply_ring.attach(multiply, true);
  multiply->add_option("lambda", o.multiply_lambda)->required();
  multiply->add_option("mu", o.multiply_mu)->required();
  multiply->add_flag("--check-oracle", o.check_oracle, "compare with the ideal normal form");
  multiply->add_option("--degree-cap", o.degree_cap, "largest degree the normal form may use");
  json_flag(multiply);

  auto* pieri = app.add_subcommand("pieri", "quantum Pieri product with c_p or sigma_p");
  o.pieri_ring.attach(pieri, true);
  auto* chern = pieri->add_option("--chern", o.pieri_chern, "multiply by c_P");
  pieri->add_option("--special", o.pieri_special, "multiply by sigma_P")->excludes(chern);
  pieri->add_option("lambda", o.pieri_lambda)->required();
  json_flag(pieri);

  auto* giambelli = app.add_subcommand("giambelli", "check the quantum Giambelli formula");
  o.giambelli_ring.attach(giambelli, true);
  giambelli->add_option("lambda", o.giambelli_lambda, "single partition; all of the box when omitted");
  json_flag(giambelli);

  auto* constants = app.add_subcommand("constants", "table of structure constants");
  o.constants_ring.attach(constants, true);
  constants->add_option("--max-degree", o.max_degree, "keep q-degrees d <= D");
  json_flag(constants);

  auto* orbit_cmd = app.add_subcommand("orbit", "Seidel orbit with weights");
  o.orbit_ring.attach(orbit_cmd, false);
  orbit_cmd->add_option("lambda", o.orbit_lambda)->required();
  json_flag(orbit_cmd);

  auto* separate = app.add_subcommand("separate", "smallest shift with |lambda^p| < |mu^p|");
  o.separate_ring.attach(separate, false);
  separate->add_option("lambda", o.separate_lambda)->required();
  separate->add_option("mu", o.separate_mu)->required();
  json_flag(separate);

  auto* certify = app.add_subcommand("certify", "uniqueness certificate for the Schubert basis");
  o.certify_ring.attach(certify, true);
  certify->add_option("--branch", o.branch)->required()->check(CLI::IsMember({"positive", "classical"}));
  certify->add_option("--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber);
  json_flag(certify);

  auto* deform = app.add_subcommand("deform-check", "structure-constant signs of a deformed basis");
  o.deform_ring.attach(deform, true);
  deform->add_option("--coeffs", o.coeffs_path, "lines '<lambda> ; <mu> ; <rational>'")->required();
  json_flag(deform);

  auto* lg24 = app.add_subcommand("lg24", "two-parameter deformations of QH(LG(2,4))");
  lg24->add_option("--a", o.lg_a)->required();
  lg24->add_option("--b", o.lg_b)->required();
  lg24->add_flag("--check-region", o.check_region, "non-negativity against a <= b <= 2a");
  lg24->add_flag("--check-assoc", o.check_assoc, "associativity over all triples");
  json_flag(lg24);

  auto* flags = app.add_subcommand("flags", "Seidel orbit t^r w in the complete flag variety");
  flags->add_option("--n", o.flags_n)->required()->check(CLI::PositiveNumber);
  flags->add_option("--w", o.flags_w)->required();
  json_flag(flags);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (multiply->parsed()) return cmd_multiply(o, out);
    if (pieri->parsed()) return cmd_pieri(o, out);
    if (giambelli->parsed()) return cmd_giambelli(o, out);
    if (constants->parsed()) return cmd_constants(o, out);
    if (orbit_cmd->parsed()) return cmd_orbit(o, out);
    if (separate->parsed()) return cmd_separate(o, out);
    if (certify->parsed()) return cmd_certify(o, out);
    if (deform->parsed()) return cmd_deform_check(o, out);
    if (lg24->parsed()) return cmd_lg24(o, out);
    if (flags->parsed()) return cmd_flags(o, out);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitFailed;
  }
  err << "error: no subcommand\n";
  return kExitUsage;
}

}  // namespace qschubert::cli
