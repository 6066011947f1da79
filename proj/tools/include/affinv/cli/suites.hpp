#pragma once

// Property suites behind `affinv verify`.
//
// Config JSON:
//   {"suite": "identity" | "lemma" | "weak", "n": int, "samples": int,
//    "seed": int, "fields": int,
//    "fd": {"h", "tau_res", "tau_sys", "tau_lemma", "tau_comb", "delta"},
//    "quadrature": {"a", "N", "seed", "shards", "threads", "grid"}}
// Missing keys take the library defaults.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "affinv/calculus.hpp"
#include "affinv/cli/report.hpp"
#include "affinv/scalar_field.hpp"

namespace affinv::cli {

struct SuiteConfig {
  std::string suite;
  std::size_t n = 2;
  std::size_t samples = 100;
  std::uint64_t seed = 1;
  /// Number of random fields for the lemma suite.
  std::size_t fields = 20;
  FDConfig fd;
  QuadratureSpec quadrature;
  /// Cross-validate the weak suite on the 20^4 Gauss grid (n = 2 only).
  bool grid = false;

  /// Throws ParseError / InvalidArgument on a bad config; unknown suite names
  /// are rejected here.
  static SuiteConfig from_json(const Json& j);
  Json to_json() const;
};

VerificationReport run_identity_suite(const SuiteConfig& cfg);
VerificationReport run_lemma_suite(const SuiteConfig& cfg);
VerificationReport run_weak_suite(const SuiteConfig& cfg);
VerificationReport run_suite(const SuiteConfig& cfg);

/// The five test functions g_m * box_bump used by the weak suite.
std::vector<ScalarField> weak_test_functions(std::size_t n, const Rational& a);
/// GL-invariant density p_2 + p_1^2 / 2 + 1.
ScalarField weak_invariant_density();
/// Density x_11, not invariant.
ScalarField weak_non_invariant_density();

}  // namespace affinv::cli
