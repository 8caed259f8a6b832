#include "anglespread/spread.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "anglespread/error.hpp"

namespace anglespread {

SegmentExtension extend_segment(const SimplexPoint& p) {
  if (is_uniform(p)) throw Error(ErrorKind::UniformInput, "the chord through u and p is undefined at p = u");

  const auto coords = p.coords();
  const std::size_t n = coords.size();
  const auto min_it = std::ranges::min_element(coords);
  const auto max_it = std::ranges::max_element(coords);
  const std::size_t idx_min = static_cast<std::size_t>(min_it - coords.begin());
  const std::size_t idx_max = static_cast<std::size_t>(max_it - coords.begin());
  const double p_min = *min_it;
  const double p_max = *max_it;
  const double dn = static_cast<double>(n);

  // On the simplex sum_i (p_max - p_i) = n p_max - 1 and sum_i (p_i - p_min) =
  // 1 - n p_min. Summing the numerators keeps a and b normalized even when p
  // carries a sum error comparable to n p_max - 1.
  std::vector<double> a(n);
  std::vector<double> b(n);
  double a_den = 0.0;
  double b_den = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    a[i] = p_max - coords[i];
    b[i] = coords[i] - p_min;
    a_den += a[i];
    b_den += b[i];
  }
  for (std::size_t i = 0; i < n; ++i) {
    a[i] /= a_den;
    b[i] /= b_den;
  }

  return SegmentExtension{
      make_simplex_point(a),
      make_simplex_point(b),
      1.0 / (1.0 - dn * p_max),
      1.0 / (1.0 - dn * p_min),
      idx_min,
      idx_max,
  };
}

SpreadResult cos_spread(const SimplexPoint& p) {
  SegmentExtension ext = extend_segment(p);
  const auto a = ext.a.coords();
  const auto b = ext.b.coords();
  const double cosine = std::clamp(dot(a, b) / (norm(a) * norm(b)), -1.0, 1.0);
  return SpreadResult{cosine, std::acos(cosine), std::move(ext)};
}

AngleBound min_angle_bound(int n, bool allow_n2) {
  if (n == 2 && allow_n2) return AngleBound{0.0, std::numbers::pi / 2.0};
  if (n < 3) throw Error(ErrorKind::BadDimension, "minimal angle spread requires n >= 3, got " + std::to_string(n));
  const double cosine = static_cast<double>(n - 2) / static_cast<double>(n + 2);
  return AngleBound{cosine, std::acos(cosine)};
}

OptimalPair optimal_pair(int n) {
  if (n < 3) throw Error(ErrorKind::BadDimension, "optimal pair requires n >= 3, got " + std::to_string(n));
  const auto size = static_cast<std::size_t>(n);
  const double unit = 1.0 / n;
  std::vector<double> a(size, unit);
  std::vector<double> b(size, unit);
  a.front() = 2.0 * unit;
  a.back() = 0.0;
  b.front() = 0.0;
  b.back() = 2.0 * unit;
  SimplexPoint b_star = make_simplex_point(b);
  return OptimalPair{make_simplex_point(a), b_star, b_star};
}

}  // namespace anglespread
