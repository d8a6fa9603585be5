#pragma once

#include <string>
#include <vector>

namespace arcfit {

// Minimizer of max |(1-t^2)^(k+1) q(t)| over [-1, 1] among even monic q of
// degree 2n-2k-2, stored through its positive zeros:
//   p*(t) = (1-t^2)^(k+1) prod_i (t^2 - t_i^2).
struct ConstrainedMinimaxPoly {
  int n = 0;
  int k = 0;
  std::vector<double> positive_zeros;  // increasing, in (0, 1)
  double norm = 0.0;                   // max |p*| on [-1, 1]
  std::string family;                  // chebyshev_k0 | penultimate | antepenultimate | remez | prescribed
};

double eval_minimax(const ConstrainedMinimaxPoly& poly, double t);

// q*(0) = prod_i (0 - t_i^2); the denominator of the C constant.
double q_star_at_zero(const ConstrainedMinimaxPoly& poly);

// k = 0: scaled/dilated Chebyshev polynomial T_{2n}.
ConstrainedMinimaxPoly chebyshev_k0(int n);

// k = n-2: single positive zero from a^n + n a - (n-1) = 0 on (0, 1 - 1/n).
ConstrainedMinimaxPoly penultimate_case(int n);

// k = n-3: zeros from the lambda / a pair of nonlinear equations.
ConstrainedMinimaxPoly antepenultimate_case(int n);

// Exchange iteration for arbitrary 0 <= k < n; matches the closed forms when
// one applies.
ConstrainedMinimaxPoly remez_general(int n, int k, double tol);

// Closed form when available, remez otherwise.
ConstrainedMinimaxPoly best_poly(int n, int k);

// Interior extrema locations of |p*|, refined; used by equioscillation checks.
std::vector<double> alternation_points(const ConstrainedMinimaxPoly& poly);

}  // namespace arcfit
