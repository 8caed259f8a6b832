#pragma once

#include <vector>

namespace anglespread {

// Building blocks of the closed-form argument: averaging a block never
// increases its squared distance to a constant vector, so the middle
// coordinates may be taken equal; fixing the minimum coordinate at zero then
// leaves a one-variable rational function Q(y) of the maximum coordinate.

/// h(w) = ||w - gamma 1||^2 evaluated at x and at its averaged vector.
struct AveragingProblem {
  double gamma;
  std::vector<double> x;  // m = x.size() >= 1
};

struct AveragingResult {
  std::vector<double> y;  // constant vector, every entry mean(x)
  double h_x;
  double h_y;
};

AveragingResult average_vector(const AveragingProblem& prob);

/// A point of the simplex written as (x, z_1, ..., z_{n-2}, y) with x the
/// minimum and y the maximum coordinate.
struct ReducedProfile {
  int n;
  double x;
  double y;
  std::vector<double> z;
  double zeta;  // (1 - x - y) / (n - 2)

  /// (x, z..., y) as a plain vector of length n.
  std::vector<double> assemble() const;
};

/// Validates x < 1/n < y, x <= z_i <= y and sum(z) = 1 - x - y (within 1e-10).
/// Throws InvalidProfile or BadDimension.
ReducedProfile make_reduced_profile(int n, double x, double y, std::vector<double> z);

/// The spread cosine expressed through (x, z, y) alone. Throws
/// DegenerateDenominator when either radicand is not positive.
double cos_quotient_reduced(const ReducedProfile& profile);

struct MiddleBlock {
  std::vector<double> z;  // zeta * 1
  double zeta;
  double z_norm_sq;
};

/// The maximizer of cos_quotient_reduced over the middle block for fixed
/// (x, y). Throws InfeasiblePair when the pair admits no feasible block.
MiddleBlock optimal_middle_block(int n, double x, double y);

struct QEval {
  int n;
  double y;
  double q_value;
  double q_prime;
};

/// Q(y), the squared spread cosine of (0, zeta, ..., zeta, y), and its
/// derivative from the factored closed form. Domain: 1/(n-1) <= y <= 1.
QEval q_eval(int n, double y);

struct QRoots {
  int n;
  std::vector<double> real_roots;    // {0, 1/(n-1), 2/n, 1}
  double complex_pair_discriminant;  // -(3n-2)(n-2)
  double complex_real;               // n / (2 (n-1)^2)
  double complex_imag;               // sqrt((3n-2)(n-2)) / (2 (n-1)^2)
  double maximizer;                  // 2/n
};

QRoots q_roots(int n);

/// Checks that both factors of Q's denominator are positive at y = 1/(n-1)
/// and y = 1 for every n in [3, n_max]. Throws DegenerateDenominator otherwise.
void check_q_endpoint_denominators(int n_max = 100);

}  // namespace anglespread
