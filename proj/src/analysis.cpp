#include "eqsteg/analysis.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <sstream>

#include "eqsteg/codec.hpp"
#include "eqsteg/error.hpp"

namespace eqsteg {

namespace {

// Characters one secret symbol adds: its offset number plus the operator.
std::size_t term_cost(CodeValue value, Operator op, const OperatorKeyMap& opmap) {
  return decimal_digits(static_cast<std::uint64_t>(value) + static_cast<std::uint64_t>(opmap.offset(op))) + 1;
}

struct CostRange {
  std::size_t lo = std::numeric_limits<std::size_t>::max();
  std::size_t hi = 0;

  void include(std::size_t c) {
    lo = std::min(lo, c);
    hi = std::max(hi, c);
  }
};

CostRange inner_cost(CodeValue value, const OperatorKeyMap& opmap) {
  CostRange r;
  for (Operator op : kChoosableOperators) {
    if (opmap.contains(op)) r.include(term_cost(value, op, opmap));
  }
  return r;
}

}  // namespace

int percent_of_sms(std::size_t total) noexcept {
  return static_cast<int>((200 * total + kSmsCharLimit) / (2 * kSmsCharLimit));
}

std::size_t decimal_digits(std::uint64_t value) noexcept {
  std::size_t d = 1;
  for (; value >= 10; value /= 10) ++d;
  return d;
}

CapacityReport capacity_report(std::string_view message, const KeyMapSet& set, std::optional<std::uint64_t> seed) {
  const auto values = map_message(message, set.charmap);

  CapacityReport r;
  r.message_length = values.size();
  r.prefix_length = envelope_prefix(set.id).size();
  r.min_total = r.prefix_length;
  r.max_total = r.prefix_length;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i + 1 == values.size()) {
      const auto c = term_cost(values[i], Operator::Equals, set.opmap);
      r.min_total += c;
      r.max_total += c;
    } else {
      const auto range = inner_cost(values[i], set.opmap);
      r.min_total += range.lo;
      r.max_total += range.hi;
    }
  }

  if (seed) {
    // Measure the unconstrained rendering so over-long messages still report.
    std::size_t total = r.prefix_length;
    if (!values.empty()) {
      const auto ops = choose_operators(values.size(), set.opmap, *seed);
      total += render_equation(embed(values, ops, set.opmap)).size();
    }
    r.actual_total = total;
  }
  r.percent_used = percent_of_sms(r.actual_total.value_or(r.min_total));
  return r;
}

std::size_t max_message_length(const KeyMapSet& set, bool pessimistic) {
  std::size_t inner = pessimistic ? 0 : std::numeric_limits<std::size_t>::max();
  std::size_t last = inner;
  for (const auto& e : set.charmap.entries()) {
    const auto range = inner_cost(e.value, set.opmap);
    const auto eq = term_cost(e.value, Operator::Equals, set.opmap);
    if (pessimistic) {
      inner = std::max(inner, range.hi);
      last = std::max(last, eq);
    } else {
      inner = std::min(inner, range.lo);
      last = std::min(last, eq);
    }
  }

  const std::size_t prefix = envelope_prefix(set.id).size();
  if (set.charmap.size() == 0 || prefix + last > kSmsCharLimit) return 0;
  return 1 + (kSmsCharLimit - prefix - last) / inner;
}

std::string_view severity_name(Severity s) noexcept { return s == Severity::Warn ? "warn" : "info"; }

std::vector<LintFinding> lint_equation(const Equation& eq, const LintConfig& config) {
  std::vector<LintFinding> findings;

  std::map<Operator, std::size_t> counts;
  std::map<Operator, std::size_t> first_seen;
  std::size_t operators = 0;
  for (std::size_t term = 0; term < eq.term_count(); ++term) {
    const Operator op = eq.op(term);
    if (op == Operator::Equals) continue;
    ++operators;
    ++counts[op];
    first_seen.try_emplace(op, 2 * term + 1);

    if (op == Operator::Pow) {
      const auto& exponent = eq.number(term + 1);
      if (exponent.value > config.exponent_threshold) {
        findings.push_back({Severity::Warn, 2 * term + 2, std::string(kRuleLargeExponent),
                            "exponent " + std::to_string(exponent.value) + " exceeds " +
                                std::to_string(config.exponent_threshold)});
      }
    }
  }

  if (operators >= config.dominance_min_operators && operators > 0) {
    for (Operator op : kChoosableOperators) {
      const auto it = counts.find(op);
      if (it == counts.end()) continue;
      const double share = static_cast<double>(it->second) / static_cast<double>(operators);
      if (share > config.dominance_threshold) {
        const int pct = static_cast<int>((200 * it->second + operators) / (2 * operators));
        findings.push_back({Severity::Info, first_seen[op], std::string(kRuleOperatorDominance),
                            std::string("'") + to_char(op) + "' is " + std::to_string(pct) + "% of operators"});
      }
    }
  }

  std::stable_sort(findings.begin(), findings.end(),
                   [](const LintFinding& a, const LintFinding& b) { return a.token_index < b.token_index; });
  return findings;
}

}  // namespace eqsteg
