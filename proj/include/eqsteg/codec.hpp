#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "eqsteg/equation.hpp"
#include "eqsteg/keymap.hpp"
#include "eqsteg/operators.hpp"

namespace eqsteg {

using MappedSequence = std::vector<CodeValue>;

/// Relative selection weights for the six non-"=" operators, indexed in
/// kChoosableOperators order.
struct OperatorWeights {
  std::array<double, 6> weights{1, 1, 1, 1, 1, 1};

  static OperatorWeights uniform() { return {}; }
  /// Every weight zero except op.
  static OperatorWeights only(Operator op);

  double weight(Operator op) const;
};

/// Operators placed after each mapped value; the last is always "=".
class OperatorSequence {
 public:
  explicit OperatorSequence(std::vector<Operator> ops);

  const std::vector<Operator>& ops() const noexcept { return ops_; }
  std::size_t size() const noexcept { return ops_.size(); }

  friend bool operator==(const OperatorSequence&, const OperatorSequence&) = default;

 private:
  std::vector<Operator> ops_;
};

MappedSequence map_message(std::string_view message, const CharMap& charmap);
std::string unmap_values(std::span<const CodeValue> values, const CharMap& charmap);

/// Deterministic in all arguments. Operators absent from the key map are
/// never chosen.
OperatorSequence choose_operators(std::size_t count, const OperatorKeyMap& opmap,
                                  std::uint64_t seed,
                                  const std::optional<OperatorWeights>& weights = std::nullopt);

Equation embed(std::span<const CodeValue> values, const OperatorSequence& ops,
               const OperatorKeyMap& opmap);
MappedSequence extract(const Equation& eq, const OperatorKeyMap& opmap);

StegoEnvelope encode(std::string_view message, const KeyMapSet& set, std::uint64_t seed,
                     const std::optional<OperatorWeights>& weights = std::nullopt);
std::string decode(std::string_view stego_text, const KeyMapRegistry& registry);

}  // namespace eqsteg
