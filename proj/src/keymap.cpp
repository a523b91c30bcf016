#include "eqsteg/keymap.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "eqsteg/error.hpp"
#include "random.hpp"

namespace eqsteg {

namespace {

void check_id(int id) {
  if (id < kMinKeyMapId || id > kMaxKeyMapId) {
    throw Error(ErrorKind::IdOutOfRange, "key map id " + std::to_string(id) +
                                             " not in " + std::to_string(kMinKeyMapId) +
                                             "-" + std::to_string(kMaxKeyMapId));
  }
}

bool printable_ascii(char c) {
  const auto u = static_cast<unsigned char>(c);
  return u >= 32 && u <= 126;
}

std::string describe_symbol(char c) {
  if (printable_ascii(c)) return std::string("'") + c + "'";
  return "code " + std::to_string(static_cast<unsigned char>(c));
}

// Default symbol order: A-Z, a-z, 1-9, 0, space.
std::vector<char> default_symbols() {
  std::vector<char> out;
  for (char c = 'A'; c <= 'Z'; ++c) out.push_back(c);
  for (char c = 'a'; c <= 'z'; ++c) out.push_back(c);
  for (char c = '1'; c <= '9'; ++c) out.push_back(c);
  out.push_back('0');
  out.push_back(' ');
  return out;
}

}  // namespace

CharMap::CharMap(std::vector<CharMapEntry> entries) : entries_(std::move(entries)) {
  by_symbol_.fill(-1);
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    auto& slot = by_symbol_[static_cast<unsigned char>(entries_[i].symbol)];
    if (slot < 0) slot = static_cast<std::int16_t>(i);
    by_value_.try_emplace(entries_[i].value, entries_[i].symbol);
  }
}

std::optional<CodeValue> CharMap::value_of(char symbol) const noexcept {
  const auto slot = by_symbol_[static_cast<unsigned char>(symbol)];
  if (slot < 0) return std::nullopt;
  return entries_[static_cast<std::size_t>(slot)].value;
}

std::optional<char> CharMap::symbol_of(CodeValue value) const noexcept {
  const auto it = by_value_.find(value);
  if (it == by_value_.end()) return std::nullopt;
  return it->second;
}

OperatorKeyMap::OperatorKeyMap(std::vector<OperatorOffset> entries)
    : entries_(std::move(entries)) {}

bool OperatorKeyMap::contains(Operator op) const noexcept {
  return std::any_of(entries_.begin(), entries_.end(),
                     [op](const OperatorOffset& e) { return e.op == op; });
}

int OperatorKeyMap::offset(Operator op) const {
  for (const auto& e : entries_) {
    if (e.op == op) return e.offset;
  }
  throw Error(ErrorKind::InvalidKeyMap, std::string("missing operator ") + to_char(op));
}

KeyMapRegistry::KeyMapRegistry(std::vector<KeyMapSet> sets) {
  for (auto& s : sets) add(std::move(s));
}

void KeyMapRegistry::add(KeyMapSet set) {
  const int id = set.id;
  if (!sets_.try_emplace(id, std::move(set)).second) {
    throw Error(ErrorKind::DuplicateKeyMap, "id " + std::to_string(id) + " already registered");
  }
}

const KeyMapSet& KeyMapRegistry::at(int id) const {
  const auto it = sets_.find(id);
  if (it == sets_.end()) throw Error(ErrorKind::UnknownKeyMap, "no key map with id " + std::to_string(id));
  return it->second;
}

CharMap default_charmap() {
  std::vector<CharMapEntry> entries;
  CodeValue v = 1;
  for (char c : default_symbols()) entries.push_back({c, v++});
  return CharMap(std::move(entries));
}

OperatorKeyMap default_operator_keymap() {
  return OperatorKeyMap({{Operator::Pow, 174},
                         {Operator::Add, 32},
                         {Operator::Sub, 5},
                         {Operator::Mul, 78},
                         {Operator::Div, 100},
                         {Operator::Mod, 62},
                         {Operator::Equals, 81}});
}

KeyMapSet default_keymap_set(int id) {
  check_id(id);
  return KeyMapSet{id, default_charmap(), default_operator_keymap()};
}

ValidationResult validate_keymap_set(const KeyMapSet& set) {
  ValidationResult result;
  auto& out = result.violations;

  if (set.id < kMinKeyMapId || set.id > kMaxKeyMapId) {
    out.push_back("id " + std::to_string(set.id) + " out of range");
  }

  if (set.charmap.size() == 0) out.push_back("empty charmap");
  std::set<char> symbols;
  std::set<CodeValue> values;
  for (const auto& e : set.charmap.entries()) {
    if (!printable_ascii(e.symbol)) out.push_back("symbol " + describe_symbol(e.symbol) + " not printable ASCII");
    if (!symbols.insert(e.symbol).second) out.push_back("duplicate symbol " + describe_symbol(e.symbol));
    if (!values.insert(e.value).second) out.push_back("duplicate value " + std::to_string(e.value));
    if (e.value < kMinCodeValue || e.value > kMaxCodeValue) {
      out.push_back("value " + std::to_string(e.value) + " out of range for symbol " + describe_symbol(e.symbol));
    }
  }

  std::set<Operator> seen;
  for (const auto& e : set.opmap.entries()) {
    if (!operator_from_char(to_char(e.op))) {
      out.push_back("unknown operator code " + std::to_string(static_cast<int>(to_char(e.op))));
      continue;
    }
    if (!seen.insert(e.op).second) out.push_back(std::string("duplicate operator ") + to_char(e.op));
    if (e.offset < 0 || e.offset > kMaxOffset) {
      out.push_back("offset " + std::to_string(e.offset) + " out of range for operator " + to_char(e.op));
    }
  }
  for (Operator op : kAllOperators) {
    if (!seen.count(op)) out.push_back(std::string("missing operator ") + to_char(op));
  }
  return result;
}

KeyMapSet generate_keymap_set(int id, std::uint64_t seed) {
  check_id(id);
  detail::SeededRng rng{static_cast<std::uint32_t>(id), detail::low_word(seed), detail::high_word(seed)};

  // Partial Fisher-Yates: the first k slots end up a uniform k-sample.
  auto sample_distinct = [&rng](int lo, int hi, std::size_t k) {
    std::vector<int> pool(static_cast<std::size_t>(hi - lo + 1));
    std::iota(pool.begin(), pool.end(), lo);
    for (std::size_t i = 0; i < k; ++i) {
      const auto j = i + rng.below(pool.size() - i);
      std::swap(pool[i], pool[j]);
    }
    pool.resize(k);
    return pool;
  };

  const auto symbols = default_symbols();
  const auto values = sample_distinct(1, 99, symbols.size());
  std::vector<CharMapEntry> entries;
  for (std::size_t i = 0; i < symbols.size(); ++i) entries.push_back({symbols[i], values[i]});

  const auto offsets = sample_distinct(1, 199, kAllOperators.size());
  std::vector<OperatorOffset> ops;
  for (std::size_t i = 0; i < kAllOperators.size(); ++i) ops.push_back({kAllOperators[i], offsets[i]});

  return KeyMapSet{id, CharMap(std::move(entries)), OperatorKeyMap(std::move(ops))};
}

std::string serialize_keymap_set(const KeyMapSet& set) {
  const auto check = validate_keymap_set(set);
  if (!check.ok()) throw Error(ErrorKind::InvalidKeyMap, check.violations.front());

  std::ostringstream os;
  os << "eqsteg-keymap v1\n";
  os << "id " << set.id << '\n';
  os << "charmap " << set.charmap.size() << '\n';
  for (const auto& e : set.charmap.entries()) {
    os << static_cast<int>(static_cast<unsigned char>(e.symbol)) << ' ' << e.value << '\n';
  }
  os << "opmap " << kAllOperators.size() << '\n';
  for (Operator op : kAllOperators) os << to_char(op) << ' ' << set.opmap.offset(op) << '\n';
  return os.str();
}

namespace {

class KeymapReader {
 public:
  explicit KeymapReader(std::string_view doc) {
    if (doc.empty()) fail(1, "empty document");
    if (doc.back() != '\n') fail(line_count(doc), "missing trailing newline");
    std::size_t start = 0;
    while (start < doc.size()) {
      const auto end = doc.find('\n', start);
      lines_.push_back(doc.substr(start, end - start));
      start = end + 1;
    }
  }

  [[noreturn]] static void fail(std::size_t line, const std::string& what) {
    throw Error(ErrorKind::KeymapParse, what + " at line " + std::to_string(line));
  }

  bool done() const { return pos_ >= lines_.size(); }
  std::size_t line_no() const { return pos_ + 1; }

  std::string_view next(std::string_view expecting) {
    if (done()) fail(line_no(), "unexpected end of document, expected " + std::string(expecting));
    return lines_[pos_++];
  }

  // "<word> <uint>", returning the word and number.
  std::pair<std::string_view, int> word_and_number(std::string_view expecting) {
    const std::size_t here = line_no();
    const auto line = next(expecting);
    const auto space = line.find(' ');
    if (space == std::string_view::npos || space == 0) fail(here, "malformed line");
    const auto number = parse_uint(line.substr(space + 1));
    if (!number) fail(here, "malformed line");
    return {line.substr(0, space), *number};
  }

  static std::optional<int> parse_uint(std::string_view s) {
    if (s.empty() || s.size() > 9) return std::nullopt;
    if (s.size() > 1 && s.front() == '0') return std::nullopt;
    int v = 0;
    for (char c : s) {
      if (c < '0' || c > '9') return std::nullopt;
      v = v * 10 + (c - '0');
    }
    return v;
  }

 private:
  static std::size_t line_count(std::string_view doc) {
    return static_cast<std::size_t>(std::count(doc.begin(), doc.end(), '\n')) + 1;
  }

  std::vector<std::string_view> lines_;
  std::size_t pos_ = 0;
};

}  // namespace

KeyMapSet parse_keymap_set(std::string_view document) {
  KeymapReader in(document);

  const auto header = in.next("header");
  if (header != "eqsteg-keymap v1") {
    if (header.substr(0, 14) == "eqsteg-keymap ") KeymapReader::fail(1, "unsupported version");
    KeymapReader::fail(1, "malformed header");
  }

  KeyMapSet set;
  {
    const auto line = in.line_no();
    const auto [word, id] = in.word_and_number("id");
    if (word != "id") KeymapReader::fail(line, "expected id");
    if (id < kMinKeyMapId || id > kMaxKeyMapId) KeymapReader::fail(line, "id out of range");
    set.id = id;
  }

  const auto section = [&in](std::string_view name) {
    const auto line = in.line_no();
    const auto [word, count] = in.word_and_number(name);
    if (word != name) KeymapReader::fail(line, "unknown section '" + std::string(word) + "'");
    return count;
  };

  const int symbol_count = section("charmap");
  if (symbol_count < 1 || symbol_count > 95) KeymapReader::fail(in.line_no() - 1, "bad charmap count");
  std::vector<CharMapEntry> entries;
  std::set<int> symbols;
  std::set<int> values;
  for (int i = 0; i < symbol_count; ++i) {
    const auto line = in.line_no();
    const auto [code_text, value] = in.word_and_number("charmap entry");
    const auto code = KeymapReader::parse_uint(code_text);
    if (!code) KeymapReader::fail(line, "malformed line");
    if (*code < 32 || *code > 126) KeymapReader::fail(line, "symbol not printable ASCII");
    if (value < kMinCodeValue || value > kMaxCodeValue) KeymapReader::fail(line, "value out of range");
    if (!symbols.insert(*code).second) KeymapReader::fail(line, "duplicate symbol");
    if (!values.insert(value).second) KeymapReader::fail(line, "duplicate value");
    entries.push_back({static_cast<char>(*code), value});
  }
  set.charmap = CharMap(std::move(entries));

  const int op_count = section("opmap");
  if (op_count != static_cast<int>(kAllOperators.size())) KeymapReader::fail(in.line_no() - 1, "opmap count must be 7");
  std::vector<OperatorOffset> ops;
  for (Operator expected : kAllOperators) {
    const auto line = in.line_no();
    const auto [op_text, offset] = in.word_and_number("opmap entry");
    if (op_text.size() != 1 || !operator_from_char(op_text.front())) KeymapReader::fail(line, "malformed line");
    const Operator op = *operator_from_char(op_text.front());
    if (std::any_of(ops.begin(), ops.end(), [op](const OperatorOffset& e) { return e.op == op; })) {
      KeymapReader::fail(line, "duplicate operator");
    }
    if (op != expected) KeymapReader::fail(line, std::string("expected operator ") + to_char(expected));
    if (offset > kMaxOffset) KeymapReader::fail(line, "offset out of range");
    ops.push_back({op, offset});
  }
  set.opmap = OperatorKeyMap(std::move(ops));

  if (!in.done()) KeymapReader::fail(in.line_no(), "unexpected content");

  const auto check = validate_keymap_set(set);
  if (!check.ok()) KeymapReader::fail(1, "failed validation: " + check.violations.front());
  return set;
}

}  // namespace eqsteg
