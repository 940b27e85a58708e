#pragma once

// Identity suites. Each suite emits one VerificationReport per identity
// instance (parameter tuple); numeric errors use |got - want| / max(1, |want|).

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cliffgen/fueter.hpp"

namespace cliffgen {

struct VerificationReport {
  std::string identity_id;
  std::vector<std::pair<std::string, std::string>> params;
  std::string grid;
  double max_abs_error = 0;
  double threshold = 0;
  bool exact = false;  // symbolic check: passed iff the identity holds exactly
  bool passed = false;
  long long runtime_ms = 0;
  std::string worst_at;  // grid point of the largest error
  std::string error;     // domain error that aborted the instance
};

struct SuiteOptions {
  std::optional<int> m;
  std::optional<int> k;
  std::optional<double> alpha;
  std::optional<double> tol;
  std::optional<int> trunc;
};

using ReportSink = std::function<void(const VerificationReport&)>;

/// lemma1, thm1, thm2, thm3, coeffs, leibniz, corollary3, corollary4,
/// classical-gf, monogenicity, operators, qpoly, ckgeneric, then "all".
const std::vector<std::string>& suite_names();
bool is_suite(const std::string& name);

/// Runs a suite; returns true iff every report passed. Throws
/// PreconditionError for an unknown suite or invalid overrides.
bool run_suite(const std::string& name, const SuiteOptions& opts, const ReportSink& sink);

std::vector<VerificationReport> run_suite(const std::string& name, const SuiteOptions& opts = {});

/// Laguerre sums: finite D_r / D^r sums (lhs) against the x0-series with
/// `terms` terms (rhs). a = identity (i), b = identity (ii).
RadialPair<long double> corollary3_lhs(int m, int k, long double x0, long double r);
RadialPair<long double> corollary3_rhs(int m, int k, long double x0, long double r, int terms);
/// Jacobi sums, both sides on the scale that carries the factor M; needs 0 < r < 1.
RadialPair<long double> corollary4_lhs(int m, int k, long double alpha, long double x0, long double r);
RadialPair<long double> corollary4_rhs(int m, int k, long double alpha, long double x0, long double r, int terms);

}  // namespace cliffgen
