#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "tleaf/numerics.hpp"

namespace tleaf {

struct SuiteConfig {
  std::uint64_t seed = 20240601;
  int samples = -1;               // -1: the suite's own default
  std::vector<int> ns;            // empty: the suite's own default
  std::vector<std::string> thetas;  // "id", "outer"; empty: both
  Tolerances tol;
};

struct SuiteResult {
  std::string name;
  long checks = 0;
  long failures = 0;
  long excluded = 0;  // borderline rank decisions left out of the comparison
  double max_residual = 0.0;
  std::map<std::string, double> metrics;
  std::vector<std::string> messages;  // first failures, for diagnostics

  bool passed() const { return failures == 0; }
  void fail(const std::string& message);
  void residual(double r) { max_residual = r > max_residual ? r : max_residual; }
};

/// rank-formula, equivariance, tangency, zero-locus, lemmas, double-iso,
/// double-cells, spherical, tuple-spherical, d4, cells.
const std::vector<std::string>& suite_names();
/// Throws ConfigurationError for an unknown name.
SuiteResult run_suite(const std::string& name, const SuiteConfig& config);

SuiteResult suite_rank_formula(const SuiteConfig& config);
SuiteResult suite_equivariance(const SuiteConfig& config);
SuiteResult suite_tangency(const SuiteConfig& config);
SuiteResult suite_zero_locus(const SuiteConfig& config);
SuiteResult suite_lemmas(const SuiteConfig& config);
SuiteResult suite_double_iso(const SuiteConfig& config);
SuiteResult suite_double_cells(const SuiteConfig& config);
SuiteResult suite_spherical(const SuiteConfig& config);
SuiteResult suite_tuple_spherical(const SuiteConfig& config);
SuiteResult suite_d4(const SuiteConfig& config);
SuiteResult suite_cells(const SuiteConfig& config);

}  // namespace tleaf
