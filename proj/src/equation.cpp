#include "eqsteg/equation.hpp"

#include "eqsteg/error.hpp"
#include "eqsteg/keymap.hpp"

namespace eqsteg {

namespace {

[[noreturn]] void invalid(const std::string& what) { throw Error(ErrorKind::InvalidEquation, what); }

std::string at(std::size_t pos) { return " at position " + std::to_string(pos); }

void check_structure(std::span<const EquationToken> tokens) {
  if (tokens.empty()) invalid("empty equation");
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    const bool want_number = i % 2 == 0;
    if (want_number != std::holds_alternative<NumberToken>(tokens[i])) {
      invalid("alternation violated at token " + std::to_string(i));
    }
    if (want_number) {
      const auto& n = std::get<NumberToken>(tokens[i]);
      if (n != make_number(n.value)) invalid("digit count mismatch at token " + std::to_string(i));
      continue;
    }
    const Operator op = std::get<Operator>(tokens[i]);
    if (!operator_from_char(to_char(op))) invalid("unknown operator at token " + std::to_string(i));
    const bool last = i + 1 == tokens.size();
    if (op == Operator::Equals && !last) invalid("'=' before end at token " + std::to_string(i));
  }
  if (!std::holds_alternative<Operator>(tokens.back()) ||
      std::get<Operator>(tokens.back()) != Operator::Equals) {
    invalid("missing terminal '='");
  }
}

}  // namespace

NumberToken make_number(std::uint64_t value) {
  std::size_t digits = 1;
  for (auto v = value; v >= 10; v /= 10) ++digits;
  return {value, digits};
}

Equation::Equation(std::vector<EquationToken> tokens) : tokens_(std::move(tokens)) {
  check_structure(tokens_);
}

const NumberToken& Equation::number(std::size_t term) const { return std::get<NumberToken>(tokens_.at(2 * term)); }

Operator Equation::op(std::size_t term) const { return std::get<Operator>(tokens_.at(2 * term + 1)); }

Equation tokenize_equation(std::string_view text) {
  if (text.empty()) invalid("empty input");

  std::vector<EquationToken> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (c >= '0' && c <= '9') {
      if (!tokens.empty() && std::holds_alternative<NumberToken>(tokens.back())) {
        invalid("adjacent numbers" + at(i));
      }
      const std::size_t start = i;
      while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i;
      const std::size_t len = i - start;
      if (len > 1 && text[start] == '0') invalid("leading zero" + at(start));
      if (len > kMaxNumberDigits) invalid("number too long" + at(start));
      std::uint64_t value = 0;
      for (std::size_t k = start; k < i; ++k) value = value * 10 + static_cast<std::uint64_t>(text[k] - '0');
      tokens.emplace_back(NumberToken{value, len});
      continue;
    }
    const auto op = operator_from_char(c);
    if (!op) invalid("unexpected character" + at(i));
    if (tokens.empty()) invalid("operator without left operand" + at(i));
    if (std::holds_alternative<Operator>(tokens.back())) invalid("adjacent operators" + at(i));
    if (*op == Operator::Equals && i + 1 != text.size()) invalid("'=' before end" + at(i));
    tokens.emplace_back(*op);
    ++i;
  }
  if (!std::holds_alternative<Operator>(tokens.back())) invalid("missing terminal '='");
  return Equation(std::move(tokens));
}

std::string render_equation(const Equation& eq) {
  std::string out;
  for (const auto& tok : eq.tokens()) {
    if (const auto* n = std::get_if<NumberToken>(&tok)) {
      out += std::to_string(n->value);
    } else {
      out += to_char(std::get<Operator>(tok));
    }
  }
  return out;
}

std::string render_equation(std::span<const EquationToken> tokens) {
  check_structure(tokens);
  return render_equation(Equation({tokens.begin(), tokens.end()}));
}

namespace {

constexpr std::string_view kPrefixHead = "Math Quiz (";
constexpr std::string_view kPrefixTail = " Pts) Answer: ";

void check_envelope_id(int id) {
  if (id < kMinKeyMapId || id > kMaxKeyMapId) {
    throw Error(ErrorKind::IdOutOfRange, "key map id " + std::to_string(id) + " not in 1-99");
  }
}

}  // namespace

std::string envelope_prefix(int keymap_id) {
  check_envelope_id(keymap_id);
  return std::string(kPrefixHead) + std::to_string(keymap_id) + std::string(kPrefixTail);
}

StegoEnvelope render_envelope(int keymap_id, std::string_view equation_text) {
  StegoEnvelope env{keymap_id, std::string(equation_text), envelope_prefix(keymap_id)};
  env.full_text += equation_text;
  if (env.full_text.size() > kSmsCharLimit) {
    throw Error(ErrorKind::CapacityExceeded, std::to_string(env.full_text.size()) + " characters exceeds " +
                                                 std::to_string(kSmsCharLimit));
  }
  if (!equation_text.empty()) tokenize_equation(equation_text);
  return env;
}

StegoEnvelope parse_envelope(std::string_view text) {
  auto malformed = [](const std::string& what) { throw Error(ErrorKind::MalformedStego, what); };

  if (text.size() > kSmsCharLimit) {
    throw Error(ErrorKind::CapacityExceeded, std::to_string(text.size()) + " characters exceeds " +
                                                 std::to_string(kSmsCharLimit));
  }
  if (text.substr(0, kPrefixHead.size()) != kPrefixHead) malformed("cover text prefix mismatch");
  auto rest = text.substr(kPrefixHead.size());

  std::size_t digits = 0;
  while (digits < rest.size() && rest[digits] >= '0' && rest[digits] <= '9') ++digits;
  if (digits == 0 || digits > 2 || rest[0] == '0') malformed("malformed points field");
  int id = 0;
  for (std::size_t k = 0; k < digits; ++k) id = id * 10 + (rest[k] - '0');
  rest = rest.substr(digits);

  if (rest.substr(0, kPrefixTail.size()) != kPrefixTail) malformed("cover text suffix mismatch");
  const auto equation = rest.substr(kPrefixTail.size());
  if (!equation.empty()) tokenize_equation(equation);

  return StegoEnvelope{id, std::string(equation), std::string(text)};
}

}  // namespace eqsteg
