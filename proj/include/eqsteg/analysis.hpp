#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "eqsteg/equation.hpp"
#include "eqsteg/keymap.hpp"

namespace eqsteg {

struct CapacityReport {
  std::size_t message_length = 0;
  std::size_t prefix_length = 0;
  std::size_t min_total = 0;
  std::size_t max_total = 0;
  std::optional<std::size_t> actual_total;
  /// Percentage of the 140-character limit; uses actual_total when present,
  /// min_total otherwise.
  int percent_used = 0;
};

/// round-half-up(100 * total / 140)
int percent_of_sms(std::size_t total) noexcept;

std::size_t decimal_digits(std::uint64_t value) noexcept;

CapacityReport capacity_report(std::string_view message, const KeyMapSet& set,
                               std::optional<std::uint64_t> seed = std::nullopt);

/// Longest message that fits in one SMS when every character costs the
/// most (pessimistic) or the least (optimistic) the key map allows.
std::size_t max_message_length(const KeyMapSet& set, bool pessimistic);

enum class Severity { Info, Warn };

std::string_view severity_name(Severity s) noexcept;

struct LintFinding {
  Severity severity;
  std::size_t token_index;
  std::string rule;
  std::string note;

  friend bool operator==(const LintFinding&, const LintFinding&) = default;
};

struct LintConfig {
  /// "^" right operands above this are flagged.
  std::uint64_t exponent_threshold = 9;
  /// Share of non-"=" operators above which one operator is flagged.
  double dominance_threshold = 0.6;
  std::size_t dominance_min_operators = 5;
};

inline constexpr std::string_view kRuleLargeExponent = "large-exponent";
inline constexpr std::string_view kRuleOperatorDominance = "operator-dominance";

/// Findings ordered by token index.
std::vector<LintFinding> lint_equation(const Equation& eq, const LintConfig& config = {});

}  // namespace eqsteg
