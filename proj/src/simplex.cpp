#include "anglespread/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "anglespread/error.hpp"

namespace anglespread {

SimplexPoint make_simplex_point(std::span<const double> raw) {
  if (raw.empty()) throw Error(ErrorKind::EmptyInput, "simplex point has no coordinates");
  if (raw.size() < 2) throw Error(ErrorKind::BadDimension, "simplex dimension must be at least 2");

  std::vector<double> coords(raw.begin(), raw.end());
  bool clamped = false;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    const double c = coords[i];
    if (!std::isfinite(c)) {
      throw Error(ErrorKind::NonFiniteCoordinate, "coordinate " + std::to_string(i) + " is not finite");
    }
    if (c < -kNegTol) {
      throw Error(ErrorKind::NegativeCoordinate,
                  "coordinate " + std::to_string(i) + " is negative (" + std::to_string(c) + ")");
    }
    if (c < 0.0) {
      coords[i] = 0.0;
      clamped = true;
    }
  }

  const double sum = std::accumulate(coords.begin(), coords.end(), 0.0);
  if (std::abs(sum - 1.0) > kSumTol) {
    throw Error(ErrorKind::BadSum, "coordinates sum to " + std::to_string(sum) + ", expected 1");
  }
  if (clamped) {
    for (double& c : coords) c /= sum;
  }
  return SimplexPoint(std::move(coords));
}

SimplexPoint uniform_point(int n) {
  if (n < 2) throw Error(ErrorKind::BadDimension, "simplex dimension must be at least 2");
  const std::vector<double> u(static_cast<std::size_t>(n), 1.0 / n);
  return make_simplex_point(u);
}

SimplexContext make_context(int n) {
  return SimplexContext{n, uniform_point(n), std::vector<double>(static_cast<std::size_t>(n), 1.0)};
}

double dot(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw Error(ErrorKind::DimensionMismatch, "vectors differ in length");
  return std::inner_product(x.begin(), x.end(), y.begin(), 0.0);
}

double norm(std::span<const double> x) { return std::sqrt(dot(x, x)); }

double vector_angle(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw Error(ErrorKind::DimensionMismatch, "vectors differ in length");
  const double nx = norm(x);
  const double ny = norm(y);
  if (nx == 0.0 || ny == 0.0) throw Error(ErrorKind::ZeroVector, "angle undefined for a zero vector");
  const double c = std::clamp(dot(x, y) / (nx * ny), -1.0, 1.0);
  return std::acos(c);
}

bool is_uniform(const SimplexPoint& p, double eps) {
  const double center = 1.0 / static_cast<double>(p.dim());
  return std::ranges::all_of(p.coords(), [&](double c) { return std::abs(c - center) <= eps; });
}

}  // namespace anglespread
