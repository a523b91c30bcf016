#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "eqsteg/operators.hpp"

namespace eqsteg {

/// Longest digit run the tokenizer accepts; keeps values inside uint64.
inline constexpr std::size_t kMaxNumberDigits = 18;

struct NumberToken {
  std::uint64_t value;
  std::size_t digits;

  friend bool operator==(const NumberToken&, const NumberToken&) = default;
};

using EquationToken = std::variant<NumberToken, Operator>;

NumberToken make_number(std::uint64_t value);

/// Number Operator Number Operator ... "=" with "=" only at the end.
/// Construction validates; an Equation is always well formed.
class Equation {
 public:
  explicit Equation(std::vector<EquationToken> tokens);

  const std::vector<EquationToken>& tokens() const noexcept { return tokens_; }
  /// Count of numbers, which equals the count of operators.
  std::size_t term_count() const noexcept { return tokens_.size() / 2; }
  const NumberToken& number(std::size_t term) const;
  Operator op(std::size_t term) const;

  friend bool operator==(const Equation&, const Equation&) = default;

 private:
  std::vector<EquationToken> tokens_;
};

Equation tokenize_equation(std::string_view text);

std::string render_equation(const Equation& eq);
/// Validates the raw sequence first; throws InvalidEquation on violations.
std::string render_equation(std::span<const EquationToken> tokens);

inline constexpr std::size_t kSmsCharLimit = 140;

struct StegoEnvelope {
  int keymap_id;
  std::string equation_text;
  std::string full_text;

  friend bool operator==(const StegoEnvelope&, const StegoEnvelope&) = default;
};

/// "Math Quiz (<id> Pts) Answer: "
std::string envelope_prefix(int keymap_id);

StegoEnvelope render_envelope(int keymap_id, std::string_view equation_text);
StegoEnvelope parse_envelope(std::string_view text);

}  // namespace eqsteg
