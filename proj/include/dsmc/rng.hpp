#ifndef DSMC_RNG_HPP
#define DSMC_RNG_HPP

#include <cstdint>
#include <vector>

namespace dsmc {

// Splittable counter-based generator (splitmix64 core). Substreams are
// derived from (seed, stream) so per-document draws do not depend on
// processing order.
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(mix(seed ^ kGolden)) {}
  Rng(uint64_t seed, uint64_t stream)
      : state_(mix(mix(seed ^ kGolden) + mix(stream ^ kStream))) {}

  uint64_t next_u64() {
    state_ += kGolden;
    return mix(state_);
  }

  // [0, 1)
  double next_double() { return (next_u64() >> 11) * 0x1.0p-53; }

  // Unbiased integer in [0, n), n > 0.
  uint32_t bounded(uint32_t n) {
    uint64_t threshold = (~uint64_t{0} - n + 1) % n;
    for (;;) {
      uint64_t r = next_u64();
      if (r >= threshold) return static_cast<uint32_t>(r % n);
    }
  }

  bool bernoulli(double p) { return next_double() < p; }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (size_t i = v.size(); i > 1; --i) {
      size_t j = bounded(static_cast<uint32_t>(i));
      std::swap(v[i - 1], v[j]);
    }
  }

 private:
  static constexpr uint64_t kGolden = 0x9e3779b97f4a7c15ULL;
  static constexpr uint64_t kStream = 0xbf58476d1ce4e5b9ULL;

  static uint64_t mix(uint64_t z) {
    z ^= z >> 30;
    z *= 0xbf58476d1ce4e5b9ULL;
    z ^= z >> 27;
    z *= 0x94d049bb133111ebULL;
    z ^= z >> 31;
    return z;
  }

  uint64_t state_;
};

}  // namespace dsmc

#endif  // DSMC_RNG_HPP
