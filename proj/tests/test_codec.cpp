#include <doctest.h>

#include <map>
#include <random>

#include "eqsteg/codec.hpp"
#include "eqsteg/error.hpp"

using namespace eqsteg;

namespace {

const std::string kAlphabet =
    "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz1234567890 ";

std::string random_message(std::mt19937_64& rng, std::size_t max_len) {
  std::string m(rng() % (max_len + 1), ' ');
  for (auto& c : m) c = kAlphabet[rng() % kAlphabet.size()];
  return m;
}

std::vector<Operator> ops_from(std::string_view text) {
  std::vector<Operator> out;
  for (char c : text) out.push_back(*operator_from_char(c));
  return out;
}

template <typename Fn>
std::string error_text(Fn&& fn, ErrorKind expected) {
  try {
    fn();
  } catch (const Error& e) {
    CHECK(e.kind() == expected);
    return e.what();
  }
  FAIL("expected an error");
  return {};
}

const MappedSequence kAttackNowLower{1, 46, 46, 27, 29, 37, 63, 40, 41, 49};
const MappedSequence kAttackNowUpper{1, 46, 46, 27, 29, 37, 63, 14, 41, 49};
constexpr std::string_view kEq2 = "63%51-220^201^107*115*237^92*119*130=";

}  // namespace

TEST_CASE("map and unmap the worked plaintexts") {
  const auto cm = default_charmap();
  CHECK(map_message("Attack now", cm) == kAttackNowLower);
  CHECK(map_message("Attack Now", cm) == kAttackNowUpper);
  CHECK(map_message("", cm).empty());
  CHECK(unmap_values(kAttackNowLower, cm) == "Attack now");
  CHECK(unmap_values(kAttackNowUpper, cm) == "Attack Now");
  CHECK(unmap_values(MappedSequence{}, cm).empty());

  CHECK(error_text([&] { map_message("Attack!", cm); }, ErrorKind::UnsupportedCharacter) ==
        "unsupported character: code 33 at position 6");
  CHECK(error_text([&] { unmap_values(MappedSequence{999}, cm); }, ErrorKind::ValueOutOfRange) ==
        "value out of range: value 999 at position 0 has no symbol");
}

TEST_CASE("operator selection") {
  const auto om = default_operator_keymap();

  CHECK(choose_operators(1, om, 3).ops() == std::vector{Operator::Equals});
  CHECK(choose_operators(10, om, 99) == choose_operators(10, om, 99));
  CHECK(choose_operators(10, om, 99) != choose_operators(10, om, 100));
  CHECK_THROWS_AS(choose_operators(0, om, 1), Error);

  SUBCASE("uniform frequencies") {
    const auto seq = choose_operators(10000, om, 7);
    REQUIRE(seq.size() == 10000);
    CHECK(seq.ops().back() == Operator::Equals);
    std::map<Operator, int> counts;
    for (std::size_t i = 0; i + 1 < seq.size(); ++i) ++counts[seq.ops()[i]];
    CHECK(counts.count(Operator::Equals) == 0);
    for (Operator op : kChoosableOperators) {
      const double freq = counts[op] / 9999.0;
      CHECK(std::abs(freq - 1.0 / 6.0) < 0.05);
    }
  }

  SUBCASE("weights") {
    OperatorWeights w;
    w.weights = {0, 3, 1, 0, 0, 0};
    const auto seq = choose_operators(4000, om, 1, w);
    int add = 0, sub = 0;
    for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
      const Operator op = seq.ops()[i];
      CHECK((op == Operator::Add || op == Operator::Sub));
      (op == Operator::Add ? add : sub)++;
    }
    CHECK(std::abs(add / 3999.0 - 0.75) < 0.03);

    const auto pow_only = choose_operators(50, om, 2, OperatorWeights::only(Operator::Pow));
    for (std::size_t i = 0; i + 1 < pow_only.size(); ++i) CHECK(pow_only.ops()[i] == Operator::Pow);
  }

  SUBCASE("all-zero weights") {
    OperatorWeights zero;
    zero.weights.fill(0);
    CHECK(error_text([&] { choose_operators(2, om, 1, zero); }, ErrorKind::NoSelectableOperator) ==
          "no selectable operator: all operator weights are zero");
    CHECK(choose_operators(1, om, 1, zero).size() == 1);
    OperatorWeights negative;
    negative.weights[0] = -1;
    CHECK_THROWS_AS(choose_operators(3, om, 1, negative), Error);
  }
}

TEST_CASE("embedding reproduces the worked equation") {
  const auto om = default_operator_keymap();
  const OperatorSequence ops(ops_from("%-^^**^**="));
  const auto eq = embed(kAttackNowUpper, ops, om);
  CHECK(render_equation(eq) == kEq2);
  CHECK(extract(eq, om) == kAttackNowUpper);

  CHECK(render_equation(embed(MappedSequence{1}, OperatorSequence(ops_from("=")), om)) == "82=");
  CHECK(extract(tokenize_equation("82="), om) == MappedSequence{1});

  CHECK_THROWS_AS(OperatorSequence(ops_from("==")), Error);
  CHECK_THROWS_AS(OperatorSequence(ops_from("+")), Error);
  CHECK_THROWS_AS(OperatorSequence({}), Error);
  CHECK(error_text([&] { embed(MappedSequence{1, 2}, OperatorSequence(ops_from("=")), om); },
                   ErrorKind::LengthMismatch) == "length mismatch: 2 values but 1 operators");
}

TEST_CASE("extraction rejects impossible values") {
  const auto om = default_operator_keymap();
  CHECK(error_text([&] { extract(tokenize_equation("3%70="), om); }, ErrorKind::ValueOutOfRange) ==
        "value out of range: 3 minus offset 62 at term 0 is outside 1-999");
  CHECK_THROWS_AS(extract(tokenize_equation("81="), om), Error);
  CHECK_THROWS_AS(extract(tokenize_equation("999999999999="), om), Error);
}

TEST_CASE("encode and decode examples") {
  const auto set = default_keymap_set(2);
  const KeyMapRegistry registry({set});

  CHECK(encode("", set, 1).full_text == "Math Quiz (2 Pts) Answer: ");
  CHECK(encode("A", set, 1).full_text == "Math Quiz (2 Pts) Answer: 82=");
  CHECK(decode("Math Quiz (2 Pts) Answer: 82=", registry) == "A");
  CHECK(decode("Math Quiz (2 Pts) Answer: ", registry).empty());
  CHECK(decode("Math Quiz (2 Pts) Answer: 63%51-220^201^107*115*237^92*119*130=", registry) == "Attack Now");

  CHECK(error_text([&] { encode(std::string(60, 'A'), set, 1); }, ErrorKind::CapacityExceeded).size() > 0);
  CHECK(error_text([&] { encode("A?", set, 1); }, ErrorKind::UnsupportedCharacter).size() > 0);
  CHECK(error_text([&] { decode("Math Quiz (9 Pts) Answer: 82=", registry); }, ErrorKind::UnknownKeyMap) ==
        "unknown key map: no key map with id 9");
  CHECK(error_text([&] { decode("Math Test (2 Pts) Answer: 82=", registry); }, ErrorKind::MalformedStego).size() >
        0);
}

TEST_CASE("decode(encode(m)) == m") {
  std::vector<KeyMapSet> sets{default_keymap_set(2), generate_keymap_set(3, 42), generate_keymap_set(17, 9)};
  const KeyMapRegistry registry(sets);
  std::mt19937_64 rng(2024);

  for (int trial = 0; trial < 1000; ++trial) {
    const auto& set = sets[static_cast<std::size_t>(trial) % sets.size()];
    const auto msg = random_message(rng, 24);
    const std::uint64_t seed = rng();
    const auto env = encode(msg, set, seed);
    REQUIRE(env.full_text.size() <= kSmsCharLimit);
    CHECK(decode(env.full_text, registry) == msg);
    // Same message, another seed, same plaintext.
    CHECK(decode(encode(msg, set, seed + 1).full_text, registry) == msg);
  }
}

TEST_CASE("every number minus its operator offset is the plaintext code") {
  const auto set = generate_keymap_set(8, 77);
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    auto msg = random_message(rng, 20);
    if (msg.empty()) msg = "x";
    const auto env = encode(msg, set, rng());
    const auto eq = tokenize_equation(env.equation_text);
    REQUIRE(eq.term_count() == msg.size());
    for (std::size_t i = 0; i < msg.size(); ++i) {
      const auto n = static_cast<std::int64_t>(eq.number(i).value);
      CHECK(n - set.opmap.offset(eq.op(i)) == *set.charmap.value_of(msg[i]));
    }
  }
}

TEST_CASE("decoding with the wrong key map never crashes") {
  const auto right = default_keymap_set(2);
  auto wrong = generate_keymap_set(2, 5);
  const KeyMapRegistry wrong_registry({wrong});
  std::mt19937_64 rng(8);
  int errors = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const auto env = encode(random_message(rng, 20), right, rng());
    try {
      decode(env.full_text, wrong_registry);
    } catch (const Error& e) {
      CHECK((e.kind() == ErrorKind::ValueOutOfRange));
      ++errors;
    }
  }
  CHECK(errors > 0);
}
