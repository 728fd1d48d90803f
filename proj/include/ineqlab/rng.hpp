#pragma once

#include <cstdint>
#include <random>

namespace ineqlab {

/// splitmix64 finalizer; used to derive per-probe seeds.
constexpr std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Seed for probe `index` of a run seeded with `seed`. Serial and parallel
/// sweeps use the same derivation, so they visit identical operands.
constexpr std::uint64_t probe_seed(std::uint64_t seed, std::uint64_t index) { return seed ^ mix64(index); }

/// mt19937_64 with distribution code written out here: the standard
/// distributions are implementation-defined, and the sweeps must reproduce
/// bit-for-bit across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t bits() { return engine_(); }

  /// Uniform on [0, 1).
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Uniform integer in [0, n).
  std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : engine_() % n; }

  /// Standard normal via Box–Muller.
  double normal();

 private:
  std::mt19937_64 engine_;
};

}  // namespace ineqlab
