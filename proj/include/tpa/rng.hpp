#ifndef TPA_RNG_HPP
#define TPA_RNG_HPP

#include <cstdint>

#include "tpa/field.hpp"

namespace tpa {

// The project pseudorandom generator: xorshift64* seeded through one
// splitmix64 step. Fixed here (rather than <random>) so that seeds produce
// identical streams on every platform and every implementation of the same
// reports. split(i) derives an independent deterministic child stream.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(splitmix(seed ^ kGolden)) {
    if (state_ == 0) state_ = kGolden;
  }

  std::uint64_t next() {
    std::uint64_t x = state_;
    x ^= x >> 12;
    x ^= x << 25;
    x ^= x >> 27;
    state_ = x;
    return x * 0x2545F4914F6CDD1DULL;
  }

  // Uniform value in [0, bound); bound = 0 yields 0.
  std::uint64_t below(std::uint64_t bound) {
    if (bound == 0) return 0;
    // Rejection sampling keeps the distribution exactly uniform.
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do {
      x = next();
    } while (x >= limit);
    return x % bound;
  }

  std::int64_t range(std::int64_t lo, std::int64_t hi) {  // inclusive
    return lo + static_cast<std::int64_t>(below(hi - lo + 1));
  }

  Rng split(std::uint64_t index) const {
    return Rng(splitmix(state_ + 0x9E3779B97F4A7C15ULL * (index + 1)));
  }

 private:
  static std::uint64_t splitmix(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
  }
  static constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;
  std::uint64_t state_;
};

// Random field element: a uniform residue over GF(p), a small fraction
// (numerator in [-9, 9], denominator in [1, 9]) over Q.
inline Scalar random_scalar(Rng& rng, const FieldSpec& spec) {
  if (spec.is_prime_field())
    return Scalar::of(spec, static_cast<long long>(rng.below(spec.modulus())));
  const std::int64_t num = rng.range(-9, 9);
  const std::int64_t den = rng.range(1, 9);
  return Scalar::from_rational(BigRational(num, den));
}

}  // namespace tpa

#endif  // TPA_RNG_HPP
