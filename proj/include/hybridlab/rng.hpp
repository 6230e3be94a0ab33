#pragma once

#include <cstdint>

namespace hybridlab {

// Deterministic, platform-independent PRNG (splitmix64). Used everywhere so
// that identical seeds give byte-identical results on any build.
struct Rng {
  std::uint64_t state;

  explicit Rng(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, bound). bound > 0.
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }

  // Uniform integer in [lo, hi] inclusive.
  std::int64_t range(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  // Uniform double in [0, 1).
  double real() { return (next() >> 11) * (1.0 / 9007199254740992.0); }

  bool coin() { return (next() & 1ULL) != 0; }
};

// Independent per-entity stream derived from (seed, id).
inline Rng substream(std::uint64_t seed, std::uint64_t id) {
  Rng mix(seed ^ (0x85ebca6b0ff51afdULL * (id + 1)));
  mix.next();
  mix.next();
  return mix;
}

}  // namespace hybridlab
