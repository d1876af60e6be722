#pragma once
// The worked examples: witness searches and their distributions next to the published values.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rankdec/analysis.hpp"

namespace rankdec {

struct ReproduceRow {
  std::string label;
  /// Element found by the search (λ, or ξ for the norm construction), with its minimal polynomial
  /// over F_q (coefficients low to high).
  std::string symbol = "λ";
  std::optional<Element> lambda;
  Polynomial minimal_polynomial;
  std::vector<std::uint64_t> expected;
  std::vector<std::uint64_t> computed;
  bool matched = false;
};

struct ReproduceReport {
  std::string example;
  std::string field;
  std::vector<ReproduceRow> rows;
  /// Extra facts checked along the way, each with its outcome.
  std::vector<std::pair<std::string, bool>> notes;

  bool passed() const;
};

std::vector<std::string> example_names();
/// "m6", "m7", "extremal" or "lowerbound".
ReproduceReport reproduce(const std::string& example, const EnumOptions& opt = {});

/// Human-readable minimal polynomial, e.g. "x^6 + x^4 + x^3 + x + 1".
std::string polynomial_string(const Polynomial& f);

}  // namespace rankdec
