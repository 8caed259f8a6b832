#include "anglespread/targets.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "anglespread/error.hpp"
#include "anglespread/spread.hpp"

namespace anglespread {

namespace {

struct SegmentRoot {
  SimplexPoint point;
  double angle;
  ChordSide side;
  bool at_end;
};

std::vector<double> lerp(std::span<const double> from, std::span<const double> to, double t) {
  std::vector<double> out(from.size());
  for (std::size_t i = 0; i < from.size(); ++i) out[i] = (1.0 - t) * from[i] + t * to[i];
  return out;
}

// Finds w on [origin, end] with angle(origin, w) = target. Only continuity is
// used: angle at t = 0 is 0 < target and the caller guarantees angle at
// t = 1 is at least target - tol.
SegmentRoot bisect_segment(const SimplexPoint& origin, const SimplexPoint& end, ChordSide side, double target,
                           double tol) {
  const auto o = origin.coords();
  const auto e = end.coords();
  const double end_angle = vector_angle(o, e);
  if (end_angle - target <= tol) {
    return SegmentRoot{end, end_angle, side, true};
  }

  double lo = 0.0;
  double hi = 1.0;
  double best_t = 1.0;
  double best_err = end_angle - target;
  for (int iter = 0; iter < kMaxBisectionIters; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double f = vector_angle(o, lerp(o, e, mid)) - target;
    if (std::abs(f) < std::abs(best_err)) {
      best_err = f;
      best_t = mid;
    }
    if (f == 0.0) break;
    (f < 0.0 ? lo : hi) = mid;
  }

  SimplexPoint w = make_simplex_point(lerp(o, e, best_t));
  const double achieved = vector_angle(o, w.coords());
  if (std::abs(achieved - target) > tol) {
    throw Error(ErrorKind::ToleranceNotMet,
                "bisection reached " + std::to_string(achieved) + " for target " + std::to_string(target));
  }
  return SegmentRoot{std::move(w), achieved, side, false};
}

// Picks the chord side per the existence argument: toward a when
// angle(origin, a) >= target, otherwise toward b.
SegmentRoot half_angle_from(const SimplexPoint& origin, const SimplexPoint& a, const SimplexPoint& b,
                            double target, double tol) {
  const double to_a = vector_angle(origin.coords(), a.coords());
  if (to_a >= target) return bisect_segment(origin, a, ChordSide::TowardA, target, tol);
  const double to_b = vector_angle(origin.coords(), b.coords());
  if (to_b >= target - tol) return bisect_segment(origin, b, ChordSide::TowardB, target, tol);
  throw Error(ErrorKind::ToleranceNotMet, "neither chord end is a half spread away (" + std::to_string(to_a) +
                                              ", " + std::to_string(to_b) + ")");
}

}  // namespace

HalfAngleTargets half_angle_targets(const SimplexPoint& p, double tol) {
  if (!(tol >= 1e-12)) throw Error(ErrorKind::InvalidArgument, "tolerance must be at least 1e-12");
  const int n = static_cast<int>(p.dim());
  const double alpha = min_angle_bound(n).angle_radians;
  const double half = 0.5 * alpha;

  const auto ext = extend_segment(p);
  const SimplexPoint u = uniform_point(n);
  SegmentRoot q = half_angle_from(p, ext.a, ext.b, half, tol);
  SegmentRoot v = half_angle_from(u, ext.a, ext.b, half, tol);

  return HalfAngleTargets{
      std::move(q.point), std::move(v.point), alpha, q.angle, v.angle, tol, q.side, v.side, q.at_end, v.at_end,
  };
}

}  // namespace anglespread
