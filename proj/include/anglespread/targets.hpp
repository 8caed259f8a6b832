#pragma once

#include "anglespread/simplex.hpp"

namespace anglespread {

inline constexpr double kDefaultTargetTol = 1e-9;
inline constexpr int kMaxBisectionIters = 200;

enum class ChordSide { TowardA, TowardB };

/// Points q and v on the chord through u and p with angle(p, q) and
/// angle(u, v) both equal to alpha_n / 2, alpha_n = arccos((n-2)/(n+2)).
///
/// A flagged *_at_chord_end means the half angle was only reached at the
/// chord endpoint itself, which happens when the chord's own spread equals
/// alpha_n (p on an optimal chord).
struct HalfAngleTargets {
  SimplexPoint q;
  SimplexPoint v;
  double alpha_n;
  double achieved_angle_pq;
  double achieved_angle_uv;
  double tolerance;
  ChordSide q_side;
  ChordSide v_side;
  bool q_at_chord_end;
  bool v_at_chord_end;
};

/// Moves from p (resp. u) along the chord toward a when the angle to a is at
/// least alpha_n / 2, otherwise toward b, and bisects the segment parameter
/// for the half angle. Throws UniformInput, InvalidArgument (tol < 1e-12),
/// BadDimension (n < 3) or ToleranceNotMet.
HalfAngleTargets half_angle_targets(const SimplexPoint& p, double tol = kDefaultTargetTol);

}  // namespace anglespread
