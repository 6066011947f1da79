#include "affinv/cli/suites.hpp"

#include <algorithm>
#include <cmath>

#include "affinv/errors.hpp"
#include "affinv/invariants.hpp"
#include "affinv/krylov.hpp"
#include "affinv/sampling.hpp"

namespace affinv::cli {

namespace {

double number_or(const Json& j, const char* key, double fallback) {
  if (!j.contains(key)) return fallback;
  if (!j.at(key).is_number()) throw ParseError(std::string("\"") + key + "\" must be a number");
  return j.at(key).get<double>();
}

std::uint64_t count_or(const Json& j, const char* key, std::uint64_t fallback) {
  if (!j.contains(key)) return fallback;
  const Json& v = j.at(key);
  if (!v.is_number_integer() || v.get<long long>() < 0) {
    throw ParseError(std::string("\"") + key + "\" must be a nonnegative integer");
  }
  return v.get<std::uint64_t>();
}

Json exact_witness(std::size_t sample, const RatMatrix& x) { return Json{{"sample", sample}, {"x", to_json(x)}}; }

}  // namespace

SuiteConfig SuiteConfig::from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("config must be a JSON object");
  if (!j.contains("suite") || !j.at("suite").is_string()) throw ParseError("config needs string \"suite\"");
  SuiteConfig c;
  c.suite = j.at("suite").get<std::string>();
  if (c.suite != "identity" && c.suite != "lemma" && c.suite != "weak") {
    throw ParseError("unknown suite '" + c.suite + "'");
  }
  c.n = count_or(j, "n", c.n);
  c.samples = count_or(j, "samples", c.samples);
  c.seed = count_or(j, "seed", c.seed);
  c.fields = count_or(j, "fields", c.fields);
  if (c.n < 1) throw InvalidArgument("n must be at least 1");
  if (c.suite == "lemma" && c.n < 2) throw InvalidArgument("lemma suite needs n >= 2");

  if (j.contains("fd")) {
    const Json& fd = j.at("fd");
    if (!fd.is_object()) throw ParseError("\"fd\" must be an object");
    c.fd.h = number_or(fd, "h", c.fd.h);
    c.fd.tau_res = number_or(fd, "tau_res", c.fd.tau_res);
    c.fd.tau_sys = number_or(fd, "tau_sys", c.fd.tau_sys);
    c.fd.tau_lemma = number_or(fd, "tau_lemma", c.fd.tau_lemma);
    c.fd.tau_comb = number_or(fd, "tau_comb", c.fd.tau_comb);
    c.fd.delta = number_or(fd, "delta", c.fd.delta);
  }
  c.fd.validate();

  c.quadrature.n = c.n;
  c.quadrature.seed = c.seed;
  if (j.contains("quadrature")) {
    const Json& q = j.at("quadrature");
    if (!q.is_object()) throw ParseError("\"quadrature\" must be an object");
    c.quadrature.a = number_or(q, "a", c.quadrature.a);
    c.quadrature.samples = count_or(q, "N", c.quadrature.samples);
    c.quadrature.seed = count_or(q, "seed", c.quadrature.seed);
    c.quadrature.shards = static_cast<unsigned>(count_or(q, "shards", c.quadrature.shards));
    c.quadrature.threads = static_cast<unsigned>(count_or(q, "threads", c.quadrature.threads));
    if (q.contains("grid")) {
      if (!q.at("grid").is_boolean()) throw ParseError("\"grid\" must be a boolean");
      c.grid = q.at("grid").get<bool>();
    }
  }
  c.quadrature.validate();
  if (c.grid && c.n != 2) throw InvalidArgument("grid cross-validation is only available for n = 2");
  return c;
}

Json SuiteConfig::to_json() const {
  Json j{{"suite", suite}, {"n", n}, {"samples", samples}, {"seed", seed}};
  if (suite == "lemma") {
    j["fields"] = fields;
  }
  if (suite != "identity") {
    j["fd"] = Json{{"h", fd.h},           {"tau_res", fd.tau_res},   {"tau_sys", fd.tau_sys},
                   {"tau_lemma", fd.tau_lemma}, {"tau_comb", fd.tau_comb}, {"delta", fd.delta}};
  }
  if (suite == "weak") {
    // threads is omitted: it does not affect the result.
    j["quadrature"] = Json{{"a", quadrature.a},       {"N", quadrature.samples}, {"seed", quadrature.seed},
                           {"shards", quadrature.shards}, {"grid", grid}};
  }
  return j;
}

// --- identity ---------------------------------------------------------------

VerificationReport run_identity_suite(const SuiteConfig& cfg) {
  VerificationReport rep;
  rep.suite = "identity";
  rep.n = cfg.n;
  rep.samples = cfg.samples;
  rep.seed = cfg.seed;
  rep.config = cfg.to_json();
  const std::size_t n = cfg.n;

  auto& gram = rep.add("trace_form_gram_is_transpose_permutation");
  auto& basis = rep.add("basis_expansion_residual_zero");
  auto& dcons = rep.add("D_krylov_equals_D_trace");
  auto& pairing = rep.add("entry_bracket_pairing_equals_power_entry");
  auto& adinv = rep.add("trace_form_ad_invariance");
  auto& gradc = rep.add("gradient_commutator_residual_zero");
  auto& homog = rep.add("D_homogeneity");
  auto& relinv = rep.add("D_relative_P_invariance");
  auto& omega_p = rep.add("omega_P_conjugation_invariant");
  auto& omega_reg = rep.add("omega_subset_regular");
  auto& comp = rep.add("companion_D_sign");

  {
    const RatMatrix g = trace_form_gram(n);
    bool ok = true;
    for (std::size_t p = 0; p < n * n; ++p)
      for (std::size_t q = 0; q < n * n; ++q) {
        const bool dual = (q / n == p % n) && (q % n == p / n);
        ok = ok && g(p, q) == (dual ? 1 : 0);
      }
    gram.record(ok, Json{{"n", n}});
  }

  for (std::size_t s = 0; s < cfg.samples; ++s) {
    Rng rng = make_rng(cfg.seed, s);
    const RatMatrix x = random_int_matrix(rng, n);
    const Json wx = exact_witness(s, x);

    for (unsigned k = 0; k < n; ++k) {
      Json w = wx;
      w["k"] = k;
      basis.record(basis_expansion_residual(x, k).is_zero(), w);
    }

    const Rational dx = D(x);
    dcons.record(dx == D_via_trace(x), wx);

    bool pair_ok = true;
    for (unsigned k = 0; k < n; ++k) {
      const RatMatrix xk = power(x, k);
      for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; j <= n; ++j) pair_ok = pair_ok && entry_bracket_pairing(x, k, i, j) == xk(i - 1, j - 1);
    }
    pairing.record(pair_ok, wx);

    {
      const RatMatrix a = random_int_matrix(rng, n);
      const RatMatrix y = random_int_matrix(rng, n);
      const Rational lhs = trace_form(commutator(a, x), y) + trace_form(x, commutator(a, y));
      Json w = wx;
      w["a"] = to_json(a);
      w["y"] = to_json(y);
      adinv.record(lhs == 0, w);
    }

    {
      const ScalarField f = random_invariant_field(rng, n);
      Json w = wx;
      w["field"] = f.to_json();
      gradc.record(gradient_commutator_residual(f, x).is_zero(), w);
    }

    {
      Rational t = random_rational(rng, 9, 4, true);
      const auto [lhs, rhs] = homogeneity_check(x, t);
      Json w = wx;
      w["t"] = to_string(t);
      homog.record(lhs == rhs, w);
    }

    if (n >= 2) {
      const RatMatrix y = random_p_matrix(rng, n);
      const auto py = p_check(y);
      const auto [lhs, rhs] = transformation_law(x, py);
      Json w = wx;
      w["y"] = to_json(y);
      relinv.record(lhs == rhs, w);
      omega_p.record((lhs != 0) == (dx != 0), w);
    }

    if (dx != 0) omega_reg.record(is_regular(x), wx);

    {
      const CompanionSpec spec = random_companion(rng, n);
      const bool ok = D(companion(spec)) == companion_sign(n);
      Json w{{"sample", s}, {"alpha", Json::array()}};
      for (const auto& a : spec.alpha) w["alpha"].push_back(to_string(a));
      comp.record(ok, w);
    }
  }
  return rep;
}

// --- lemma ------------------------------------------------------------------

VerificationReport run_lemma_suite(const SuiteConfig& cfg) {
  VerificationReport rep;
  rep.suite = "lemma";
  rep.n = cfg.n;
  rep.samples = cfg.samples;
  rep.seed = cfg.seed;
  rep.config = cfg.to_json();
  const std::size_t n = cfg.n;
  const FDConfig& fd = cfg.fd;

  auto& pinv = rep.add("p_invariance_residual_within_tau_res", false);
  auto& lnj = rep.add("L_nj_within_tau_lemma", false);
  auto& sys = rep.add("reduced_system_within_tau_sys", false);
  auto& lemma = rep.add("lemma_pass");
  auto& kry = rep.add("residuals_equal_krylov_times_solution", false);
  auto& full = rep.add("full_identity_residual_within_tau_comb", false);
  auto& coord = rep.add("coordinate_field_not_P_invariant");

  // Points with |D(x)| >= delta, entries k/8 in [-2, 2].
  Rng point_rng = make_rng(cfg.seed, 0x9017);
  std::vector<RatMatrix> points;
  while (points.size() < cfg.samples) {
    RatMatrix x = random_grid_matrix(point_rng, n, 16, 8);
    if (std::abs(D(x).get_d()) >= fd.delta) points.push_back(std::move(x));
  }
  Rng field_rng = make_rng(cfg.seed, 0xF1E1D);
  std::vector<ScalarField> fields;
  for (std::size_t f = 0; f < cfg.fields; ++f) fields.push_back(random_invariant_field(field_rng, n));

  const ScalarField coordinate = ScalarField::var(n, n);
  Rng general_rng = make_rng(cfg.seed, 0x6E6E);

  for (std::size_t p = 0; p < points.size(); ++p) {
    const RatMatrix& x = points[p];
    const FloatMatrix xf(x);
    const RatMatrix krylov = krylov_matrix(x).rows;

    for (std::size_t f = 0; f < fields.size(); ++f) {
      const ReducedSystem rs = reduced_system_check(fields[f], x, fd);
      Json w{{"point", p}, {"x", to_json(x)}, {"field", fields[f].to_json()}};
      double smax = 0;
      double rmax = 0;
      double kdiff = 0;
      double kscale = 1;
      for (std::size_t k = 0; k < n; ++k) {
        double ks = 0;
        for (std::size_t j = 0; j < n; ++j) {
          ks += krylov(k, j).get_d() * rs.solution[j];
          kscale = std::max(kscale, std::abs(krylov(k, j).get_d() * rs.solution[j]));
        }
        kdiff = std::max(kdiff, std::abs(ks - rs.residuals[k]));
        rmax = std::max(rmax, std::abs(rs.residuals[k]));
      }
      for (double s : rs.solution) smax = std::max(smax, std::abs(s));

      pinv.observe(rs.p_residual);
      pinv.record(rs.p_residual <= fd.tau_res, w);
      lnj.observe(smax);
      lnj.record(smax <= fd.tau_lemma, w);
      sys.observe(rmax);
      sys.record(rmax <= fd.tau_sys, w);
      lemma.record(rs.lemma_pass, w);
      kry.observe(kdiff / kscale);
      kry.record(kdiff <= 1e-12 * kscale * static_cast<double>(n), w);
    }

    {
      const ScalarField g = random_field(general_rng, n, 2);
      Json w{{"point", p}, {"x", to_json(x)}, {"field", g.to_json()}};
      double worst = 0;
      for (unsigned k = 0; k < n; ++k) worst = std::max(worst, full_identity_residual(g, xf, k, fd));
      full.observe(worst);
      full.record(worst <= fd.tau_comb, w);
    }

    coord.record(p_invariance_residual(coordinate, xf, fd) > fd.tau_res, Json{{"point", p}, {"x", to_json(x)}});
  }
  return rep;
}

// --- weak -------------------------------------------------------------------

std::vector<ScalarField> weak_test_functions(std::size_t n, const Rational& a) {
  const ScalarField bump = box_bump(n, a);
  const auto c = [](long p, long q) { return ScalarField::constant(Rational(Rational(p) / q)); };
  const ScalarField one = c(1, 1);
  const ScalarField x11 = ScalarField::var(1, 1);
  const ScalarField xn1 = ScalarField::var(n, 1);
  const ScalarField x1n = ScalarField::var(1, n);
  const ScalarField xnn = ScalarField::var(n, n);
  return {
      bump,
      ScalarField::add({one, c(1, 2) * x11}) * bump,
      ScalarField::add({one, c(1, 2) * xn1}) * bump,
      ScalarField::add({one, c(1, 4) * x1n * xn1}) * bump,
      ScalarField::add({one, c(1, 2) * x11, c(-1, 2) * xnn, c(1, 4) * x1n}) * bump,
  };
}

ScalarField weak_invariant_density() {
  return ScalarField::add({ScalarField::constant(Rational(1)), ScalarField::pk(2),
                           ScalarField::constant(Rational(Rational(1) / 2)) * ScalarField::pow(ScalarField::pk(1), 2)});
}

ScalarField weak_non_invariant_density() { return ScalarField::var(1, 1); }

VerificationReport run_weak_suite(const SuiteConfig& cfg) {
  VerificationReport rep;
  rep.suite = "weak";
  rep.n = cfg.n;
  rep.samples = cfg.quadrature.samples;
  rep.seed = cfg.quadrature.seed;
  rep.config = cfg.to_json();
  const std::size_t n = cfg.n;
  const QuadratureSpec& q = cfg.quadrature;

  auto& div = rep.add("adjoint_fields_divergence_free");
  auto& boundary = rep.add("test_functions_vanish_on_boundary", false);
  auto& inv = rep.add("invariant_density_weak_derivative_zero", false);
  auto& witness = rep.add("non_invariant_density_detected", false);

  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= n; ++j)
      div.record(adjoint_field_divergence(n, i, j) == 0, Json{{"i", i}, {"j", j}});

  const auto tests = weak_test_functions(n, Rational(q.a));
  for (std::size_t m = 0; m < tests.size(); ++m) {
    bool ok = true;
    double worst = 0;
    try {
      worst = check_boundary(tests[m], q);
    } catch (const BoundaryLeak&) {
      ok = false;
    }
    boundary.observe(worst);
    boundary.record(ok, Json{{"test_function", m}, {"psi", tests[m].to_json()}});
  }
  if (!boundary.passed()) return rep;

  const ScalarField u = weak_invariant_density();
  const ScalarField v = weak_non_invariant_density();
  double best_sigma = 0;
  for (std::size_t m = 0; m < tests.size(); ++m) {
    const auto est = weak_lie_derivatives(u, tests[m], q);
    for (std::size_t p = 0; p < est.size(); ++p) {
      const double bound = std::max(3.0 * est[p].std_error, 1e-2);
      inv.observe(std::abs(est[p].estimate) / bound);
      inv.record(std::abs(est[p].estimate) <= bound,
                 Json{{"test_function", m}, {"i", p / n + 1}, {"j", p % n + 1}, {"estimate", est[p].estimate},
                      {"std_error", est[p].std_error}});
    }
    const auto wit = weak_lie_derivatives(v, tests[m], q);
    for (const auto& e : wit) {
      if (e.std_error > 0) best_sigma = std::max(best_sigma, std::abs(e.estimate) / e.std_error);
    }
  }
  witness.observe(best_sigma);
  witness.record(best_sigma > 5.0, Json{{"density", v.to_json()}, {"best_sigma", best_sigma}});

  if (cfg.grid) {
    auto& grid_inv = rep.add("grid_invariant_density_zero", false);
    auto& grid_mc = rep.add("grid_agrees_with_monte_carlo", false);
    for (std::size_t m = 0; m < tests.size(); ++m) {
      const auto g = weak_lie_derivatives_grid(u, tests[m], q.a);
      for (std::size_t p = 0; p < g.size(); ++p) {
        grid_inv.observe(std::abs(g[p]));
        grid_inv.record(std::abs(g[p]) <= 1e-8, Json{{"test_function", m}, {"i", p / n + 1}, {"j", p % n + 1}});
      }
      const auto gv = weak_lie_derivatives_grid(v, tests[m], q.a);
      const auto mc = weak_lie_derivatives(v, tests[m], q);
      for (std::size_t p = 0; p < gv.size(); ++p) {
        const double z = mc[p].std_error > 0 ? std::abs(mc[p].estimate - gv[p]) / mc[p].std_error : 0.0;
        grid_mc.observe(z);
        grid_mc.record(z <= 5.0, Json{{"test_function", m}, {"i", p / n + 1}, {"j", p % n + 1}, {"grid", gv[p]},
                                      {"mc", mc[p].estimate}, {"std_error", mc[p].std_error}});
      }
    }
  }
  return rep;
}

VerificationReport run_suite(const SuiteConfig& cfg) {
  if (cfg.suite == "identity") return run_identity_suite(cfg);
  if (cfg.suite == "lemma") return run_lemma_suite(cfg);
  if (cfg.suite == "weak") return run_weak_suite(cfg);
  throw ParseError("unknown suite '" + cfg.suite + "'");
}

}  // namespace affinv::cli
