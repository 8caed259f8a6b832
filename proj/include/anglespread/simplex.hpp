#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace anglespread {

/// Maximum allowed |sum(coords) - 1| for an accepted simplex point.
inline constexpr double kSumTol = 1e-9;
/// Coordinates in [-kNegTol, 0) are treated as rounding noise and clamped.
inline constexpr double kNegTol = 1e-12;
/// Default infinity-norm radius around u inside which a point counts as uniform.
inline constexpr double kUniformEps = 1e-10;

/// A validated point of the probability simplex. Immutable once built; the
/// only way to obtain one is make_simplex_point().
class SimplexPoint {
 public:
  std::size_t dim() const noexcept { return coords_.size(); }
  std::span<const double> coords() const noexcept { return coords_; }
  double operator[](std::size_t i) const { return coords_[i]; }

  friend bool operator==(const SimplexPoint&, const SimplexPoint&) = default;

 private:
  explicit SimplexPoint(std::vector<double> coords) : coords_(std::move(coords)) {}
  friend SimplexPoint make_simplex_point(std::span<const double> raw);

  std::vector<double> coords_;
};

/// Validates raw coordinates as a point of the simplex (n >= 2).
///
/// Coordinates in [-kNegTol, 0) are clamped to zero, after which the vector is
/// renormalized by its new total. Throws Error with kind EmptyInput,
/// BadDimension (n == 1), NonFiniteCoordinate, NegativeCoordinate or BadSum.
SimplexPoint make_simplex_point(std::span<const double> raw);

/// The uniform point u and the all-ones vector for dimension n.
struct SimplexContext {
  int n;
  SimplexPoint u;
  std::vector<double> ones;
};

SimplexContext make_context(int n);
SimplexPoint uniform_point(int n);

double dot(std::span<const double> x, std::span<const double> y);
double norm(std::span<const double> x);

/// Angle in [0, pi] between two nonzero vectors, measured at the origin.
/// The cosine is clamped to [-1, 1] before arccos.
double vector_angle(std::span<const double> x, std::span<const double> y);

/// True iff max_i |p_i - 1/n| <= eps.
bool is_uniform(const SimplexPoint& p, double eps = kUniformEps);

}  // namespace anglespread
