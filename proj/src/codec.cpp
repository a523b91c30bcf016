#include "eqsteg/codec.hpp"

#include <cmath>

#include "eqsteg/error.hpp"
#include "random.hpp"

namespace eqsteg {

namespace {

std::size_t choosable_index(Operator op) {
  for (std::size_t i = 0; i < kChoosableOperators.size(); ++i) {
    if (kChoosableOperators[i] == op) return i;
  }
  throw Error(ErrorKind::InvalidOperators, std::string("operator ") + to_char(op) + " is not selectable");
}

}  // namespace

OperatorWeights OperatorWeights::only(Operator op) {
  OperatorWeights w;
  w.weights.fill(0.0);
  w.weights[choosable_index(op)] = 1.0;
  return w;
}

double OperatorWeights::weight(Operator op) const { return weights[choosable_index(op)]; }

OperatorSequence::OperatorSequence(std::vector<Operator> ops) : ops_(std::move(ops)) {
  if (ops_.empty()) throw Error(ErrorKind::InvalidOperators, "empty operator sequence");
  for (std::size_t i = 0; i < ops_.size(); ++i) {
    const Operator op = ops_[i];
    if (!operator_from_char(to_char(op))) throw Error(ErrorKind::InvalidOperators, "unknown operator");
    const bool last = i + 1 == ops_.size();
    if (last && op != Operator::Equals) throw Error(ErrorKind::InvalidOperators, "last operator must be '='");
    if (!last && op == Operator::Equals) {
      throw Error(ErrorKind::InvalidOperators, "'=' before end at index " + std::to_string(i));
    }
  }
}

MappedSequence map_message(std::string_view message, const CharMap& charmap) {
  MappedSequence values;
  values.reserve(message.size());
  for (std::size_t i = 0; i < message.size(); ++i) {
    const auto v = charmap.value_of(message[i]);
    if (!v) {
      throw Error(ErrorKind::UnsupportedCharacter, "code " + std::to_string(static_cast<unsigned char>(message[i])) +
                                                       " at position " + std::to_string(i));
    }
    values.push_back(*v);
  }
  return values;
}

std::string unmap_values(std::span<const CodeValue> values, const CharMap& charmap) {
  std::string out;
  out.reserve(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    const auto c = charmap.symbol_of(values[i]);
    if (!c) {
      throw Error(ErrorKind::ValueOutOfRange, "value " + std::to_string(values[i]) + " at position " +
                                                  std::to_string(i) + " has no symbol");
    }
    out.push_back(*c);
  }
  return out;
}

OperatorSequence choose_operators(std::size_t count, const OperatorKeyMap& opmap, std::uint64_t seed,
                                  const std::optional<OperatorWeights>& weights) {
  if (count == 0) throw Error(ErrorKind::InvalidOperators, "operator count must be at least 1");

  std::array<double, 6> w = weights.value_or(OperatorWeights::uniform()).weights;
  double total = 0.0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!std::isfinite(w[i]) || w[i] < 0.0) {
      throw Error(ErrorKind::InvalidOperators, "weights must be finite and non-negative");
    }
    if (!opmap.contains(kChoosableOperators[i])) w[i] = 0.0;
    total += w[i];
  }
  if (count > 1 && total <= 0.0) {
    throw Error(ErrorKind::NoSelectableOperator, "all operator weights are zero");
  }

  detail::SeededRng rng{detail::low_word(seed), detail::high_word(seed)};
  std::vector<Operator> ops;
  ops.reserve(count);
  for (std::size_t n = 0; n + 1 < count; ++n) {
    const double r = rng.unit() * total;
    double cumulative = 0.0;
    std::size_t pick = w.size();
    for (std::size_t i = 0; i < w.size(); ++i) {
      cumulative += w[i];
      if (w[i] > 0.0 && r < cumulative) {
        pick = i;
        break;
      }
    }
    // Rounding can leave r at the very top; fall back to the last live operator.
    if (pick == w.size()) {
      for (std::size_t i = w.size(); i-- > 0;) {
        if (w[i] > 0.0) {
          pick = i;
          break;
        }
      }
    }
    ops.push_back(kChoosableOperators[pick]);
  }
  ops.push_back(Operator::Equals);
  return OperatorSequence(std::move(ops));
}

Equation embed(std::span<const CodeValue> values, const OperatorSequence& ops, const OperatorKeyMap& opmap) {
  if (values.size() != ops.size()) {
    throw Error(ErrorKind::LengthMismatch, std::to_string(values.size()) + " values but " +
                                               std::to_string(ops.size()) + " operators");
  }
  std::vector<EquationToken> tokens;
  tokens.reserve(2 * values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] < kMinCodeValue) {
      throw Error(ErrorKind::ValueOutOfRange, "value " + std::to_string(values[i]) + " at position " +
                                                  std::to_string(i));
    }
    const Operator op = ops.ops()[i];
    tokens.emplace_back(make_number(static_cast<std::uint64_t>(values[i]) +
                                    static_cast<std::uint64_t>(opmap.offset(op))));
    tokens.emplace_back(op);
  }
  return Equation(std::move(tokens));
}

MappedSequence extract(const Equation& eq, const OperatorKeyMap& opmap) {
  MappedSequence values;
  values.reserve(eq.term_count());
  for (std::size_t i = 0; i < eq.term_count(); ++i) {
    const auto number = eq.number(i).value;
    const auto offset = static_cast<std::uint64_t>(opmap.offset(eq.op(i)));
    if (number <= offset || number - offset > static_cast<std::uint64_t>(kMaxCodeValue)) {
      throw Error(ErrorKind::ValueOutOfRange, std::to_string(number) + " minus offset " + std::to_string(offset) +
                                                  " at term " + std::to_string(i) + " is outside 1-" +
                                                  std::to_string(kMaxCodeValue));
    }
    values.push_back(static_cast<CodeValue>(number - offset));
  }
  return values;
}

StegoEnvelope encode(std::string_view message, const KeyMapSet& set, std::uint64_t seed,
                     const std::optional<OperatorWeights>& weights) {
  const auto values = map_message(message, set.charmap);
  if (values.empty()) return render_envelope(set.id, "");
  const auto ops = choose_operators(values.size(), set.opmap, seed, weights);
  return render_envelope(set.id, render_equation(embed(values, ops, set.opmap)));
}

std::string decode(std::string_view stego_text, const KeyMapRegistry& registry) {
  const auto envelope = parse_envelope(stego_text);
  const auto& set = registry.at(envelope.keymap_id);
  if (envelope.equation_text.empty()) return {};
  const auto values = extract(tokenize_equation(envelope.equation_text), set.opmap);
  return unmap_values(values, set.charmap);
}

}  // namespace eqsteg
