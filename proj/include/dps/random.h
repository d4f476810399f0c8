#ifndef DPS_RANDOM_H
#define DPS_RANDOM_H

#include <cstddef>
#include <cstdint>
#include <random>

namespace dps {

// Seeded generator with platform-independent bounded draws. The engine
// itself (mt19937_64) is fully specified by the standard; the std
// distributions are not, so bounded integers and reals are derived here.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t Next() { return engine_(); }

  // Uniform integer in [0, n). n must be > 0.
  std::size_t UniformIndex(std::size_t n);

  // Uniform real in [0, 1) with 53 random bits.
  double UniformReal() {
    return static_cast<double>(Next() >> 11) * 0x1.0p-53;
  }

 private:
  std::mt19937_64 engine_;
};

inline std::size_t Rng::UniformIndex(std::size_t n) {
  const std::uint64_t bound = n;
  // Reject the low remainder so every residue is equally likely.
  const std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    const std::uint64_t r = Next();
    if (r >= threshold) return static_cast<std::size_t>(r % bound);
  }
}

}  // namespace dps

#endif  // DPS_RANDOM_H
