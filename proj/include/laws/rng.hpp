#ifndef LAWS_RNG_HPP
#define LAWS_RNG_HPP

#include <cstdint>
#include <random>

namespace laws {

// Deterministic RNG used everywhere randomness is needed.  mt19937_64 has a
// fully specified output stream, and the bounded draw below avoids
// std::uniform_int_distribution (whose mapping is implementation-defined), so
// identical seeds give identical results on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  // Uniform value in [0, bound), bound >= 1, by rejection sampling.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit =
        std::numeric_limits<std::uint64_t>::max() -
        std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t r = engine_();
    while (r >= limit) r = engine_();
    return r % bound;
  }

  bool coin() { return (engine_() & 1u) != 0; }

 private:
  std::mt19937_64 engine_;
};

inline constexpr std::uint64_t kDefaultSeed = 0xC0FFEE;

}  // namespace laws

#endif
