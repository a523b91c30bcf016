#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "eqsteg/operators.hpp"

namespace eqsteg {

using CodeValue = int;

inline constexpr CodeValue kMinCodeValue = 1;
inline constexpr CodeValue kMaxCodeValue = 999;
inline constexpr int kMaxOffset = 999;
inline constexpr int kMinKeyMapId = 1;
inline constexpr int kMaxKeyMapId = 99;

struct CharMapEntry {
  char symbol;
  CodeValue value;

  friend bool operator==(const CharMapEntry&, const CharMapEntry&) = default;
};

/// Symbol <-> code value table. Entries keep their insertion order, which is
/// also the order they are serialized in. The constructor does not enforce
/// the bijection; use validate_keymap_set() for that. Lookups resolve to the
/// first matching entry.
class CharMap {
 public:
  CharMap() = default;
  explicit CharMap(std::vector<CharMapEntry> entries);

  const std::vector<CharMapEntry>& entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }

  std::optional<CodeValue> value_of(char symbol) const noexcept;
  std::optional<char> symbol_of(CodeValue value) const noexcept;

  friend bool operator==(const CharMap& a, const CharMap& b) {
    return a.entries_ == b.entries_;
  }

 private:
  std::vector<CharMapEntry> entries_;
  std::array<std::int16_t, 256> by_symbol_{};  // index into entries_, -1 if absent
  std::unordered_map<CodeValue, char> by_value_;
};

struct OperatorOffset {
  Operator op;
  int offset;

  friend bool operator==(const OperatorOffset&, const OperatorOffset&) = default;
};

/// Additive offsets applied to the number preceding each operator.
class OperatorKeyMap {
 public:
  OperatorKeyMap() = default;
  explicit OperatorKeyMap(std::vector<OperatorOffset> entries);

  const std::vector<OperatorOffset>& entries() const noexcept { return entries_; }

  bool contains(Operator op) const noexcept;
  /// Embedding offset; throws InvalidKeyMap when op has no entry.
  int offset(Operator op) const;
  /// Extraction offset, the exact negation of offset().
  int extraction_offset(Operator op) const { return -offset(op); }

  friend bool operator==(const OperatorKeyMap& a, const OperatorKeyMap& b) {
    return a.entries_ == b.entries_;
  }

 private:
  std::vector<OperatorOffset> entries_;
};

struct KeyMapSet {
  int id = kMinKeyMapId;
  CharMap charmap;
  OperatorKeyMap opmap;

  friend bool operator==(const KeyMapSet&, const KeyMapSet&) = default;
};

class KeyMapRegistry {
 public:
  KeyMapRegistry() = default;
  explicit KeyMapRegistry(std::vector<KeyMapSet> sets);

  /// Throws DuplicateKeyMap if the id is already registered.
  void add(KeyMapSet set);
  bool contains(int id) const noexcept { return sets_.count(id) != 0; }
  /// Throws UnknownKeyMap for unregistered ids.
  const KeyMapSet& at(int id) const;
  std::size_t size() const noexcept { return sets_.size(); }

 private:
  std::map<int, KeyMapSet> sets_;
};

struct ValidationResult {
  std::vector<std::string> violations;

  bool ok() const noexcept { return violations.empty(); }
};

CharMap default_charmap();
OperatorKeyMap default_operator_keymap();

/// The published example tables under the given id (1-99).
KeyMapSet default_keymap_set(int id);

ValidationResult validate_keymap_set(const KeyMapSet& set);

/// Random but reproducible set: the 63 default symbols mapped onto distinct
/// values in 1-99, and distinct operator offsets in 1-199.
KeyMapSet generate_keymap_set(int id, std::uint64_t seed);

std::string serialize_keymap_set(const KeyMapSet& set);
KeyMapSet parse_keymap_set(std::string_view document);

}  // namespace eqsteg
