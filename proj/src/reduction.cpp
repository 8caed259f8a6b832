#include "anglespread/reduction.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "anglespread/error.hpp"

namespace anglespread {

namespace {

constexpr double kProfileSumTol = 1e-10;
constexpr double kBoxTol = 1e-12;
constexpr double kDomainSlack = 1e-12;

double squared_distance_to_constant(const std::vector<double>& w, double gamma) {
  double acc = 0.0;
  for (double wi : w) acc += (wi - gamma) * (wi - gamma);
  return acc;
}

double sum_of_squares(const std::vector<double>& w) {
  return std::inner_product(w.begin(), w.end(), w.begin(), 0.0);
}

// The two factors of Q's denominator.
double q_den_left(double nd, double y) { return (1 - y) * (1 - y) + (nd - 2) * (nd + 1) * y * y - 2 * (nd - 2) * y; }
double q_den_right(double nd, double y) { return (1 - y) * (1 - y) + (nd - 2) * y * y; }

void require_dimension(int n) {
  if (n < 3) throw Error(ErrorKind::BadDimension, "requires n >= 3, got " + std::to_string(n));
}

}  // namespace

AveragingResult average_vector(const AveragingProblem& prob) {
  if (prob.x.empty()) throw Error(ErrorKind::BadDimension, "averaging requires m >= 1");
  const double m = static_cast<double>(prob.x.size());
  // A constant vector is its own average; returning it unchanged makes the
  // operator exactly idempotent in floating point.
  const bool constant = std::ranges::all_of(prob.x, [&](double v) { return v == prob.x.front(); });
  const double eta = constant ? prob.x.front() : std::accumulate(prob.x.begin(), prob.x.end(), 0.0) / m;
  std::vector<double> y(prob.x.size(), eta);
  const double h_x = squared_distance_to_constant(prob.x, prob.gamma);
  const double h_y = squared_distance_to_constant(y, prob.gamma);
  return AveragingResult{std::move(y), h_x, h_y};
}

std::vector<double> ReducedProfile::assemble() const {
  std::vector<double> p;
  p.reserve(z.size() + 2);
  p.push_back(x);
  p.insert(p.end(), z.begin(), z.end());
  p.push_back(y);
  return p;
}

ReducedProfile make_reduced_profile(int n, double x, double y, std::vector<double> z) {
  require_dimension(n);
  if (z.size() != static_cast<std::size_t>(n - 2)) {
    throw Error(ErrorKind::InvalidProfile, "middle block must have n - 2 entries");
  }
  const double center = 1.0 / n;
  if (!(x < center && center < y)) {
    throw Error(ErrorKind::InvalidProfile, "profile requires x < 1/n < y");
  }
  for (double zi : z) {
    if (zi < x - kBoxTol || zi > y + kBoxTol) {
      throw Error(ErrorKind::InvalidProfile, "middle coordinate outside [x, y]");
    }
  }
  const double sum = std::accumulate(z.begin(), z.end(), 0.0);
  if (std::abs(sum - (1.0 - x - y)) > kProfileSumTol) {
    throw Error(ErrorKind::InvalidProfile, "middle block must sum to 1 - x - y");
  }
  const double zeta = (1.0 - x - y) / (n - 2);
  return ReducedProfile{n, x, y, std::move(z), zeta};
}

double cos_quotient_reduced(const ReducedProfile& profile) {
  const double nd = profile.n;
  const double x = profile.x;
  const double y = profile.y;
  double numerator = 0.0;
  for (double zi : profile.z) numerator += (y - zi) * (zi - x);
  const double z_sq = sum_of_squares(profile.z);
  const double rad_a = x * x + z_sq + (nd + 1) * y * y - 2 * y;
  const double rad_b = (nd + 1) * x * x - 2 * x + z_sq + y * y;
  if (rad_a <= 0.0 || rad_b <= 0.0) {
    throw Error(ErrorKind::DegenerateDenominator, "cosine quotient radicand is not positive");
  }
  return numerator / (std::sqrt(rad_a) * std::sqrt(rad_b));
}

MiddleBlock optimal_middle_block(int n, double x, double y) {
  require_dimension(n);
  const double center = 1.0 / n;
  if (!(0.0 <= x && x < center && center < y && y <= 1.0)) {
    throw Error(ErrorKind::InfeasiblePair, "requires 0 <= x < 1/n < y <= 1");
  }
  const double zeta = (1.0 - x - y) / (n - 2);
  if (zeta < x - kBoxTol || zeta > y + kBoxTol) {
    throw Error(ErrorKind::InfeasiblePair, "common middle value lies outside [x, y]");
  }
  const double rest = 1.0 - x - y;
  return MiddleBlock{std::vector<double>(static_cast<std::size_t>(n - 2), zeta), zeta, rest * rest / (n - 2)};
}

QEval q_eval(int n, double y) {
  require_dimension(n);
  const double nd = n;
  const double lo = 1.0 / (nd - 1);
  if (!(y >= lo - kDomainSlack && y <= 1.0 + kDomainSlack)) {
    throw Error(ErrorKind::OutOfDomain, "Q is defined on [1/(n-1), 1], got y = " + std::to_string(y));
  }

  const double lin = (nd - 1) * y - 1;
  const double numerator = lin * lin * (1 - y) * (1 - y);
  const double q_value = numerator / (q_den_left(nd, y) * q_den_right(nd, y));

  const double quad = (nd - 1) * (nd - 1) * y * y - nd * y + 1;
  const double left = (nd * nd - nd - 1) * y * y + 2 * (1 - nd) * y + 1;
  const double right = (nd - 1) * y * y - 2 * y + 1;
  const double q_prime =
      2 * (nd - 2) * quad * lin * (nd * y - 2) * (y - 1) * y / (left * left * right * right);

  return QEval{n, y, q_value, q_prime};
}

QRoots q_roots(int n) {
  require_dimension(n);
  const double nd = n;
  const double scale = 2 * (nd - 1) * (nd - 1);
  const double disc = -(3 * nd - 2) * (nd - 2);
  return QRoots{
      n,
      {0.0, 1.0 / (nd - 1), 2.0 / nd, 1.0},
      disc,
      nd / scale,
      std::sqrt(-disc) / scale,
      2.0 / nd,
  };
}

void check_q_endpoint_denominators(int n_max) {
  for (int n = 3; n <= n_max; ++n) {
    const double nd = n;
    for (double y : {1.0 / (nd - 1), 1.0}) {
      if (!(q_den_left(nd, y) > 0.0 && q_den_right(nd, y) > 0.0)) {
        throw Error(ErrorKind::DegenerateDenominator,
                    "Q denominator vanishes at an endpoint for n = " + std::to_string(n));
      }
    }
  }
}

}  // namespace anglespread
