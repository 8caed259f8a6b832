#pragma once

#include <cstddef>

#include "anglespread/simplex.hpp"

namespace anglespread {

/// The longest segment [a, b] inside the simplex that contains both u and p.
///
/// a sits on the far side of u from p (a = u + lambda_minus (p - u)) and has a
/// zero at idx_max; b lies beyond p (b = u + lambda_plus (p - u)) and has a
/// zero at idx_min. The lambdas are diagnostics only: a and b are built from
/// the coordinate formulas, which stay accurate when p is close to u.
struct SegmentExtension {
  SimplexPoint a;
  SimplexPoint b;
  double lambda_minus;
  double lambda_plus;
  std::size_t idx_min;  // smallest index attaining min p_i
  std::size_t idx_max;  // smallest index attaining max p_i
};

struct SpreadResult {
  double cosine;
  double angle_radians;
  SegmentExtension extension;
};

struct AngleBound {
  double cosine;
  double angle_radians;
};

struct OptimalPair {
  SimplexPoint a_star;
  SimplexPoint b_star;
  SimplexPoint p_star;
};

/// Throws UniformInput when p is within kUniformEps of u.
SegmentExtension extend_segment(const SimplexPoint& p);

/// cos of the angle between a(p) and b(p). For n = 2 the chord is the whole
/// simplex and the cosine is 0.
SpreadResult cos_spread(const SimplexPoint& p);

/// ((n-2)/(n+2), arccos((n-2)/(n+2))), the largest achievable spread cosine.
/// n = 2 yields (0, pi/2) only when allow_n2 is set; otherwise BadDimension.
AngleBound min_angle_bound(int n, bool allow_n2 = false);

/// a* = (2,1,...,1,0)/n and b* = p* = (0,1,...,1,2)/n.
OptimalPair optimal_pair(int n);

}  // namespace anglespread
