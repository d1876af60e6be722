#pragma once
// Randomized and exhaustive verification suites driven by the CLI and the acceptance gate.

#include <cstdint>
#include <string>
#include <vector>

#include "rankdec/enumerate.hpp"

namespace rankdec {

struct CheckResult {
  std::string name;
  std::uint64_t instances = 0;
  std::uint64_t failures = 0;
  /// First failing instance, empty when everything passed.
  std::string detail;

  bool passed() const noexcept { return failures == 0 && instances > 0; }
  void fail(const std::string& what) {
    if (failures++ == 0) detail = what;
  }
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;

  bool passed() const;
  const CheckResult& check(const std::string& name) const;
};

struct VerifyOptions {
  std::uint64_t seed = 1;
  /// Random instances per randomized check.
  std::size_t trials = 50;
  /// Random subspaces for the trace-dual involution check.
  std::size_t involution_samples = 1000;
  EnumOptions enumeration;
};

/// Trace duality: geometric duals, subfield duals, the involution and dimension laws, the
/// hyperplane identity for systems and blockwise duals of product systems; q = 2, m ∈ {4, 5, 6}.
SuiteReport verify_duality(const VerifyOptions& opt);
/// Subspace products over F_32: the linear Cauchy–Davenport bound and the critical-pair structure,
/// exhaustively over all pairs of 2-dimensional subspaces, plus critical complements and the
/// splitting of product duals.
SuiteReport verify_products(const VerifyOptions& opt);
/// Detection round trips on scrambled codes, geometric duals of decomposable codes, the family W_t
/// against enumeration, and the characterization verdicts.
SuiteReport verify_characterization(const VerifyOptions& opt);
/// Minimum-weight formula against enumeration, the bounds, and the extremal constructions.
SuiteReport verify_bounds(const VerifyOptions& opt);

std::vector<std::string> suite_names();
/// "duality", "products", "characterization", "bounds", or "all".
std::vector<SuiteReport> run_suites(const std::string& name, const VerifyOptions& opt);

}  // namespace rankdec
