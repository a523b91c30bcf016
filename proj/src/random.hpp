#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>

namespace eqsteg::detail {

// mt19937_64 and seed_seq are fully specified by the standard, so draws made
// through this wrapper are identical on every conforming library.
class SeededRng {
 public:
  explicit SeededRng(std::initializer_list<std::uint32_t> seeds) {
    std::seed_seq seq(seeds);
    engine_.seed(seq);
  }

  std::uint64_t next() { return engine_(); }

  // Uniform in [0, bound), bound > 0. Rejection sampling avoids modulo bias.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = UINT64_MAX - (UINT64_MAX % bound);
    std::uint64_t x = next();
    while (x >= limit) x = next();
    return x % bound;
  }

  // Uniform in [0, 1) with 53 bits of precision.
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  std::mt19937_64 engine_;
};

inline std::uint32_t low_word(std::uint64_t v) { return static_cast<std::uint32_t>(v); }
inline std::uint32_t high_word(std::uint64_t v) { return static_cast<std::uint32_t>(v >> 32); }

}  // namespace eqsteg::detail
