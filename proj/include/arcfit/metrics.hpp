#pragma once

#include <utility>
#include <vector>

#include "arcfit/geometry.hpp"

namespace arcfit {

struct ErrorReport {
  double max_abs_psi = 0.0;
  double max_psi_location = 0.0;  // argmax in [-1, 1]
  double hausdorff = 0.0;         // max |(||p(t)|| - 1)|, refined
  int num_samples = 0;
  bool refined = false;
  // true when every sample satisfies ||p(t)|| in (0, 2) and the polar angle of
  // p(t) stays within the fan spanned by the curve endpoints; required for the
  // radial distance to coincide with the Hausdorff distance.
  bool radial_projection_valid = false;
};

// Simplified signed radial error: ||p(t)||^2 - 1.
double psi(const BezierCurve& curve, double t);

// Radial distance to the unit circle: | ||p(t)|| - 1 |.
double psi_tilde(const BezierCurve& curve, double t);

// Dense sampling with golden-section refinement of every local maximum.
ErrorReport max_error(const BezierCurve& curve, int samples);

// Least-squares slope of log max|psi| against log(phi) for fits of the given
// case at the supplied angles; returns (order, constant) with
// max|psi| ~ constant * phi^order.
std::pair<double, double> convergence_order(int degree, int smoothness,
                                            const std::vector<double>& angles);

}  // namespace arcfit
