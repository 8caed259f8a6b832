#pragma once

#include <cstdint>
#include <vector>

namespace anglespread {

/// Stateless counter-based generator: draw i is SplitMix64's output function
/// applied to seed + (i + 1) * 0x9E3779B97F4A7C15. Any draw can be computed
/// independently of the others, so sample i is the same no matter which
/// thread produces it.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed) noexcept : seed_(seed) {}

  std::uint64_t bits(std::uint64_t counter) const noexcept;
  /// Uniform on [0, 1) with 53 bits of resolution.
  double uniform(std::uint64_t counter) const noexcept;
  /// Exp(1) via -log(1 - U).
  double exponential(std::uint64_t counter) const noexcept;

  std::uint64_t seed() const noexcept { return seed_; }

 private:
  std::uint64_t seed_;
};

/// Sample `index` of a uniform stream on the n-simplex: n exponentials drawn
/// at counters index*n .. index*n + n - 1, divided by their sum.
std::vector<double> uniform_simplex_sample(const CounterRng& rng, std::uint64_t index, int n);

}  // namespace anglespread
