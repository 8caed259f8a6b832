#pragma once

#include <cstdint>

#include "anglespread/simplex.hpp"

namespace anglespread {

// Brute-force maximizers of the spread cosine. They evaluate cos_spread on
// many points and never consult the closed form, except to fill in the
// report's bound and gap.

struct GridSpec {
  int n;
  int k;  // coordinates are multiples of 1/k; requires k >= n
  double exclude_uniform_eps = 1e-12;
};

struct OracleReport {
  double best_cosine;
  SimplexPoint best_point;
  std::uint64_t points_evaluated;
  double closed_form_bound;
  double gap;  // closed_form_bound - best_cosine
};

inline constexpr std::uint64_t kMaxGridPoints = 100'000'000;

/// C(k + n - 1, n - 1), saturating at UINT64_MAX.
std::uint64_t grid_size(int n, int k);

/// Enumerates every composition of k into n parts (colexicographic order),
/// skipping points within exclude_uniform_eps of u. Ties on the cosine go to
/// the lexicographically smallest point, so the report does not depend on
/// `threads`. Throws TooLarge above kMaxGridPoints.
OracleReport grid_maximize(const GridSpec& spec, unsigned threads = 1);

/// Maximizes over `samples` uniform draws from the simplex (see
/// uniform_simplex_sample). Deterministic in (n, samples, seed).
OracleReport random_maximize(int n, std::uint64_t samples, std::uint64_t seed, unsigned threads = 1);

}  // namespace anglespread
