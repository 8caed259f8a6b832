#include "anglespread/rng.hpp"

#include <cmath>

namespace anglespread {

std::uint64_t CounterRng::bits(std::uint64_t counter) const noexcept {
  std::uint64_t z = seed_ + (counter + 1) * 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

double CounterRng::uniform(std::uint64_t counter) const noexcept {
  return static_cast<double>(bits(counter) >> 11) * 0x1.0p-53;
}

double CounterRng::exponential(std::uint64_t counter) const noexcept {
  return -std::log1p(-uniform(counter));
}

std::vector<double> uniform_simplex_sample(const CounterRng& rng, std::uint64_t index, int n) {
  const auto size = static_cast<std::uint64_t>(n);
  std::vector<double> w(size);
  double total = 0.0;
  for (std::uint64_t i = 0; i < size; ++i) {
    w[i] = rng.exponential(index * size + i);
    total += w[i];
  }
  if (total > 0.0) {
    for (double& wi : w) wi /= total;
  } else {
    for (double& wi : w) wi = 1.0 / static_cast<double>(n);
  }
  return w;
}

}  // namespace anglespread
