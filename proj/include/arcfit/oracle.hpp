#pragma once

#include <array>
#include <functional>
#include <vector>

#include "arcfit/geometry.hpp"
#include "arcfit/minimax.hpp"

namespace arcfit {

struct GridSearchResult {
  std::vector<double> best_params;
  double best_max_abs_psi = 0.0;
  int grid_resolution = 0;
  std::vector<std::array<double, 2>> search_box;  // per-dimension (lo, hi)
};

// Plain bisection; at most ceil(log2((hi-lo)/tol)) halvings.
double bisect_root(const std::function<double(double)>& f, double lo, double hi,
                   double tol);

// Local-optimality witness: true iff every random even perturbation of the
// polynomial's non-leading coefficients, of magnitude eps, has max-norm at
// least poly.norm - 1e-12 (dense grid with local refinement). Deterministic
// for a fixed seed.
bool minimax_perturbation_probe(const ConstrainedMinimaxPoly& poly, int trials,
                                double eps, unsigned seed = 0);

// Brute-force check that no parameter choice near the fitted one does better:
// exhaustive grid over center_params +-50% per dimension, then three rounds of
// coordinate descent. Deliberately independent of the fitter: only
// geometry.instantiate and metrics.max_error are used, with the caller
// supplying the box center.
GridSearchResult conjecture_probe(int degree, int smoothness, const ArcSpec& arc,
                                  int resolution,
                                  const std::vector<double>& center_params);

}  // namespace arcfit
