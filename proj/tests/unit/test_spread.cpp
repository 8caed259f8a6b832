#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "anglespread/error.hpp"
#include "anglespread/spread.hpp"
#include "support/oracles.hpp"

using namespace anglespread;
namespace ts = testsupport;

namespace {

SimplexPoint pt(std::vector<double> v) { return make_simplex_point(v); }

void check_coords(const SimplexPoint& p, const std::vector<double>& expected, double tol) {
  REQUIRE(p.dim() == expected.size());
  for (std::size_t i = 0; i < expected.size(); ++i) CHECK(std::abs(p[i] - expected[i]) <= tol);
}

}  // namespace

TEST_CASE("extend_segment matches a line search for the chord ends") {
  const std::vector<double> raw{0.2, 0.3, 0.5};
  // Oracle: walk the line u + lambda (p - u) until a coordinate turns negative.
  const double lam_minus = ts::line_search_boundary(raw, -1.0);
  const double lam_plus = ts::line_search_boundary(raw, 1.0);
  CHECK(lam_minus == doctest::Approx(-2.0).epsilon(1e-14));
  CHECK(lam_plus == doctest::Approx(2.5).epsilon(1e-14));
  const auto a_ref = ts::point_on_line(raw, lam_minus);
  const auto b_ref = ts::point_on_line(raw, lam_plus);

  const SegmentExtension ext = extend_segment(pt(raw));
  check_coords(ext.a, a_ref, 1e-12);
  check_coords(ext.b, b_ref, 1e-12);
  check_coords(ext.a, {0.6, 0.4, 0.0}, 1e-15);
  check_coords(ext.b, {0.0, 0.25, 0.75}, 1e-15);
  CHECK(ext.lambda_minus == doctest::Approx(-2.0).epsilon(1e-14));
  CHECK(ext.lambda_plus == doctest::Approx(2.5).epsilon(1e-14));
  CHECK(ext.idx_min == 0);
  CHECK(ext.idx_max == 2);
}

TEST_CASE("extend_segment at the optimal point") {
  const SegmentExtension ext = extend_segment(pt({0.0, 1.0 / 3, 2.0 / 3}));
  check_coords(ext.a, {2.0 / 3, 1.0 / 3, 0.0}, 1e-15);
  check_coords(ext.b, {0.0, 1.0 / 3, 2.0 / 3}, 1e-15);
}

TEST_CASE("extend_segment rejects u") {
  const double q = 0.25;
  CHECK_THROWS_AS(extend_segment(pt({q, q, q, q})), Error);
  try {
    extend_segment(pt({q, q, q, q}));
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::UniformInput);
  }
}

TEST_CASE("ties pick the smallest index") {
  const SegmentExtension ext = extend_segment(pt({0.4, 0.1, 0.4, 0.1}));
  CHECK(ext.idx_min == 1);
  CHECK(ext.idx_max == 0);
  CHECK(ext.a[0] == 0.0);
  CHECK(ext.a[2] == 0.0);
  CHECK(ext.b[1] == 0.0);
  CHECK(ext.b[3] == 0.0);
}

TEST_CASE("cos_spread examples") {
  CHECK(cos_spread(pt({0.0, 1.0 / 3, 2.0 / 3})).cosine == doctest::Approx(0.2).epsilon(1e-14));
  // 0.1 / sqrt(0.52 * 0.625), from the oracle-checked chord above.
  const SpreadResult r = cos_spread(pt({0.2, 0.3, 0.5}));
  CHECK(std::abs(r.cosine - 0.17541160386140583) <= 1e-15);
  CHECK(std::abs(r.angle_radians - std::acos(r.cosine)) <= 1e-12);
  CHECK(cos_spread(pt({0.4, 0.2, 0.2, 0.2, 0.0})).cosine == doctest::Approx(3.0 / 7.0).epsilon(1e-14));
}

TEST_CASE("n = 2 has a right-angle spread for every p") {
  const SpreadResult r = cos_spread(pt({0.3, 0.7}));
  CHECK(r.cosine == 0.0);
  CHECK(r.angle_radians == doctest::Approx(std::numbers::pi / 2));
  check_coords(r.extension.a, {1.0, 0.0}, 1e-15);
  check_coords(r.extension.b, {0.0, 1.0}, 1e-15);
}

TEST_CASE("min_angle_bound") {
  const AngleBound b3 = min_angle_bound(3);
  CHECK(b3.cosine == doctest::Approx(0.2).epsilon(1e-15));
  CHECK(std::abs(b3.angle_radians - 1.369438406004566) <= 1e-12);
  CHECK(min_angle_bound(4).cosine == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
  for (int n = 3; n < 100; ++n) CHECK(min_angle_bound(n + 1).cosine > min_angle_bound(n).cosine);

  CHECK_THROWS_AS(min_angle_bound(2), Error);
  CHECK_THROWS_AS(min_angle_bound(1, true), Error);
  const AngleBound b2 = min_angle_bound(2, true);
  CHECK(b2.cosine == 0.0);
  CHECK(b2.angle_radians == doctest::Approx(std::numbers::pi / 2));
}

TEST_CASE("optimal_pair") {
  const OptimalPair p3 = optimal_pair(3);
  check_coords(p3.a_star, {2.0 / 3, 1.0 / 3, 0.0}, 1e-15);
  check_coords(p3.b_star, {0.0, 1.0 / 3, 2.0 / 3}, 1e-15);
  CHECK(p3.p_star == p3.b_star);
  check_coords(optimal_pair(4).a_star, {0.5, 0.25, 0.25, 0.0}, 1e-15);
  CHECK_THROWS_AS(optimal_pair(2), Error);

  for (int n = 3; n <= 200; ++n) {
    const OptimalPair pair = optimal_pair(n);
    const double expected = static_cast<double>(n - 2) / (n + 2);
    CHECK(std::abs(ts::raw_cosine(pair.a_star.coords(), pair.b_star.coords()) - expected) <= 1e-12);
    const SpreadResult r = cos_spread(pair.p_star);
    CHECK(std::abs(r.cosine - expected) <= 1e-12);
    check_coords(r.extension.a, std::vector<double>(pair.a_star.coords().begin(), pair.a_star.coords().end()),
                 1e-15);
  }
}

TEST_CASE("chord properties on random points") {
  std::mt19937_64 gen(2024);
  for (int trial = 0; trial < 5000; ++trial) {
    const int n = 3 + trial % 30;
    const auto raw = ts::random_simplex_with_faces(gen, n);
    const SimplexPoint p = pt(raw);
    if (is_uniform(p)) continue;
    const SegmentExtension ext = extend_segment(p);
    const double u = 1.0 / n;

    // Feasibility.
    for (const auto* w : {&ext.a, &ext.b}) {
      double sum = 0.0;
      for (double c : w->coords()) {
        CHECK(c >= -1e-12);
        sum += c;
      }
      CHECK(std::abs(sum - 1.0) <= 1e-9);
    }

    // a = u + lambda_minus (p - u) and b = u + lambda_plus (p - u).
    for (int i = 0; i < n; ++i) {
      CHECK(std::abs(ext.a[i] - (u + ext.lambda_minus * (raw[i] - u))) <= 1e-12);
      CHECK(std::abs(ext.b[i] - (u + ext.lambda_plus * (raw[i] - u))) <= 1e-12);
    }
    CHECK(ext.a[ext.idx_max] == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(ext.b[ext.idx_min] == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(ext.lambda_minus < 0.0);
    CHECK(ext.lambda_plus > 1.0 - 1e-12);

    // Collinearity of b - a with p - u.
    std::vector<double> ba(n);
    std::vector<double> pu(n);
    for (int i = 0; i < n; ++i) {
      ba[i] = ext.b[i] - ext.a[i];
      pu[i] = raw[i] - u;
    }
    CHECK(ts::raw_cosine(ba, pu) >= 1.0 - 1e-10);

    // Extremality: stepping past either end leaves the orthant.
    const double delta = 1e-6;
    CHECK(ts::min_coord_on_line(raw, ext.lambda_minus - delta) < 0.0);
    CHECK(ts::min_coord_on_line(raw, ext.lambda_plus + delta) < 0.0);
  }
}

TEST_CASE("spread cosine never exceeds the closed-form bound") {
  for (int n : {3, 5, 10, 40}) {
    std::mt19937_64 gen(static_cast<std::uint64_t>(n));
    const double bound = static_cast<double>(n - 2) / (n + 2);
    double worst = -1.0;
    for (int trial = 0; trial < 100'000; ++trial) {
      const SimplexPoint p = pt(ts::random_simplex(gen, n));
      if (is_uniform(p)) continue;
      worst = std::max(worst, cos_spread(p).cosine);
    }
    CHECK(worst <= bound + 1e-9);
  }
}

TEST_CASE("spread is invariant under coordinate permutations") {
  std::mt19937_64 gen(99);
  for (int trial = 0; trial < 2000; ++trial) {
    const int n = 3 + trial % 12;
    auto raw = ts::random_simplex_with_faces(gen, n);
    const SimplexPoint p = pt(raw);
    if (is_uniform(p)) continue;
    const double base = cos_spread(p).cosine;
    std::shuffle(raw.begin(), raw.end(), gen);
    CHECK(std::abs(cos_spread(pt(raw)).cosine - base) <= 1e-12);
  }
}

TEST_CASE("spread is constant along the chord") {
  std::mt19937_64 gen(5);
  for (int trial = 0; trial < 2000; ++trial) {
    const int n = trial % 2 == 0 ? 3 : 10;
    const SimplexPoint p = pt(ts::random_simplex(gen, n));
    const SpreadResult base = cos_spread(p);
    const auto a = base.extension.a.coords();
    const auto b = base.extension.b.coords();
    for (double s : {0.1, 0.3, 0.5, 0.7, 0.9}) {
      std::vector<double> w(n);
      for (int i = 0; i < n; ++i) w[i] = (1 - s) * a[i] + s * b[i];
      const SimplexPoint q = pt(w);
      if (is_uniform(q)) continue;
      CHECK(std::abs(cos_spread(q).cosine - base.cosine) <= 1e-10);
    }
  }
}

TEST_CASE("points very close to u still give an accurate chord") {
  // p = u + 1e-8 (e_2 - e_0) at n = 3: the chord ends stay exact.
  const double third = 1.0 / 3.0;
  const SegmentExtension ext = extend_segment(pt({third - 1e-8, third, third + 1e-8}));
  check_coords(ext.a, {2.0 / 3, 1.0 / 3, 0.0}, 1e-7);
  check_coords(ext.b, {0.0, 1.0 / 3, 2.0 / 3}, 1e-7);
  CHECK(std::abs(cos_spread(pt({third - 1e-8, third, third + 1e-8})).cosine - 0.2) <= 1e-7);
}
