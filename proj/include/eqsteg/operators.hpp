#pragma once

#include <array>
#include <cstddef>
#include <optional>

namespace eqsteg {

enum class Operator : char {
  Pow = '^',
  Add = '+',
  Sub = '-',
  Mul = '*',
  Div = '/',
  Mod = '%',
  Equals = '=',
};

/// Canonical order used by the keymap file format and weight vectors.
inline constexpr std::array<Operator, 7> kAllOperators = {
    Operator::Pow, Operator::Add, Operator::Sub, Operator::Mul,
    Operator::Div, Operator::Mod, Operator::Equals};

/// The operators that may appear before the terminal "=".
inline constexpr std::array<Operator, 6> kChoosableOperators = {
    Operator::Pow, Operator::Add, Operator::Sub,
    Operator::Mul, Operator::Div, Operator::Mod};

constexpr char to_char(Operator op) noexcept { return static_cast<char>(op); }

constexpr std::optional<Operator> operator_from_char(char c) noexcept {
  for (Operator op : kAllOperators) {
    if (to_char(op) == c) return op;
  }
  return std::nullopt;
}

/// Position of op in kAllOperators.
constexpr std::size_t operator_index(Operator op) noexcept {
  for (std::size_t i = 0; i < kAllOperators.size(); ++i) {
    if (kAllOperators[i] == op) return i;
  }
  return kAllOperators.size();
}

}  // namespace eqsteg
