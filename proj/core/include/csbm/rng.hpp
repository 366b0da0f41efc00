#pragma once

#include <cstdint>

namespace csbm::rng {

// Stream tags keep draws for unrelated purposes on disjoint streams, so
// adding a consumer never perturbs existing ones.
enum Tag : std::uint64_t {
  kSigma = 1,
  kParentEdge,
  kSubsample1,
  kSubsample2,
  kPermutation,
  kPairClass,
  kMnsPartition,
  kStageMns,
  kTrialSeed,
  kSpectralStart,
};

constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Counter-based draw keyed by (seed, tag, a, b). Pure integer arithmetic,
// identical on every platform.
constexpr std::uint64_t draw(std::uint64_t seed, std::uint64_t tag,
                             std::uint64_t a, std::uint64_t b = 0) {
  std::uint64_t h = splitmix64(seed);
  h = splitmix64(h ^ tag);
  h = splitmix64(h ^ a);
  h = splitmix64(h ^ b);
  return h;
}

constexpr double to_unit(std::uint64_t h) {
  return static_cast<double>(h >> 11) * 0x1.0p-53;  // [0,1)
}

inline double uniform(std::uint64_t seed, std::uint64_t tag,
                      std::uint64_t a, std::uint64_t b = 0) {
  return to_unit(draw(seed, tag, a, b));
}

// Sequential stream for order-dependent sampling (shuffles, partitions).
class Stream {
 public:
  Stream(std::uint64_t seed, std::uint64_t tag) : seed_(seed), tag_(tag) {}

  std::uint64_t next() { return draw(seed_, tag_, ctr_++); }
  double next_unit() { return to_unit(next()); }

  // Unbiased draw in [0, bound) by rejection.
  std::uint64_t next_below(std::uint64_t bound) {
    const std::uint64_t threshold = (-bound) % bound;  // 2^64 mod bound
    for (;;) {
      const std::uint64_t r = next();
      if (r >= threshold) return r % bound;
    }
  }

 private:
  std::uint64_t seed_;
  std::uint64_t tag_;
  std::uint64_t ctr_ = 0;
};

}  // namespace csbm::rng
