#include "arcfit/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

#include "arcfit/metrics.hpp"

namespace arcfit {

namespace {

constexpr double kGolden = 0.61803398874989484820;

double golden_max_abs(const std::function<double(double)>& f, double lo, double hi) {
  double a = lo, b = hi;
  double x1 = b - kGolden * (b - a);
  double x2 = a + kGolden * (b - a);
  double f1 = std::abs(f(x1)), f2 = std::abs(f(x2));
  while (b - a > 1e-13) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + kGolden * (b - a);
      f2 = std::abs(f(x2));
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - kGolden * (b - a);
      f1 = std::abs(f(x1));
    }
  }
  return std::abs(f(0.5 * (a + b)));
}

double refined_abs_max(const std::function<double(double)>& f, int samples) {
  std::vector<double> vs(samples + 1);
  double best = 0.0;
  for (int i = 0; i <= samples; ++i) {
    vs[i] = std::abs(f(-1.0 + 2.0 * i / samples));
    best = std::max(best, vs[i]);
  }
  for (int i = 1; i < samples; ++i) {
    if (vs[i] >= vs[i - 1] && vs[i] >= vs[i + 1]) {
      best = std::max(best, golden_max_abs(f, -1.0 + 2.0 * (i - 1) / samples,
                                           -1.0 + 2.0 * (i + 1) / samples));
    }
  }
  return best;
}

}  // namespace

double bisect_root(const std::function<double(double)>& f, double lo, double hi,
                   double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("bisect_root: tol must be positive");
  if (!(hi > lo)) throw std::invalid_argument("bisect_root: empty interval");
  double flo = f(lo), fhi = f(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if (flo * fhi > 0.0) {
    throw std::runtime_error("bisect_root: no sign change on the given interval");
  }
  const int iterations = static_cast<int>(std::ceil(std::log2((hi - lo) / tol)));
  for (int i = 0; i < iterations; ++i) {
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    if (fm == 0.0) return mid;
    if (flo * fm < 0.0) {
      hi = mid;
    } else {
      lo = mid;
      flo = fm;
    }
  }
  return 0.5 * (lo + hi);
}

bool minimax_perturbation_probe(const ConstrainedMinimaxPoly& poly, int trials,
                                double eps, unsigned seed) {
  if (trials < 1) throw std::invalid_argument("perturbation probe: trials must be >= 1");
  if (!(eps > 0.0)) throw std::invalid_argument("perturbation probe: eps must be positive");
  const int m = static_cast<int>(poly.positive_zeros.size());
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> uniform(-1.0, 1.0);
  for (int trial = 0; trial < trials; ++trial) {
    std::vector<double> coeff(std::max(m, 1));
    for (double& c : coeff) c = uniform(rng);
    // even perturbation below the leading term keeps q monic
    const auto perturbed = [&](double t) {
      double add = 0.0;
      double t2j = 1.0;
      for (int j = 0; j < m; ++j) {
        add += coeff[j] * t2j;
        t2j *= t * t;
      }
      return eval_minimax(poly, t) +
             eps * add * std::pow(1.0 - t * t, poly.k + 1);
    };
    if (refined_abs_max(perturbed, 10000) < poly.norm - 1e-12) return false;
  }
  return true;
}

GridSearchResult conjecture_probe(int degree, int smoothness, const ArcSpec& arc,
                                  int resolution,
                                  const std::vector<double>& center_params) {
  if (!case_supported(degree, smoothness)) {
    throw std::invalid_argument("conjecture_probe: unsupported (degree, smoothness)");
  }
  if (resolution < 11) {
    throw std::invalid_argument("conjecture_probe: resolution must be at least 11");
  }
  const GkScaffold scaffold(degree, smoothness, arc);
  const int dims = scaffold.free_param_count();
  if (static_cast<int>(center_params.size()) != dims) {
    throw std::invalid_argument("conjecture_probe: center_params size mismatch");
  }

  GridSearchResult result;
  result.grid_resolution = resolution;
  for (int d = 0; d < dims; ++d) {
    result.search_box.push_back({0.5 * center_params[d], 1.5 * center_params[d]});
  }

  const auto objective = [&](const std::vector<double>& params) -> double {
    try {
      return max_error(instantiate(scaffold, params), 4096).max_abs_psi;
    } catch (const std::domain_error&) {
      return std::numeric_limits<double>::infinity();
    }
  };

  std::vector<double> best;
  double best_val = std::numeric_limits<double>::infinity();
  std::vector<double> params(dims);
  if (dims == 1) {
    for (int i = 0; i < resolution; ++i) {
      params[0] = result.search_box[0][0] +
                  (result.search_box[0][1] - result.search_box[0][0]) * i / (resolution - 1);
      const double v = objective(params);
      if (v < best_val) {
        best_val = v;
        best = params;
      }
    }
  } else {
    for (int i = 0; i < resolution; ++i) {
      params[0] = result.search_box[0][0] +
                  (result.search_box[0][1] - result.search_box[0][0]) * i / (resolution - 1);
      for (int j = 0; j < resolution; ++j) {
        params[1] = result.search_box[1][0] +
                    (result.search_box[1][1] - result.search_box[1][0]) * j / (resolution - 1);
        const double v = objective(params);
        if (v < best_val) {
          best_val = v;
          best = params;
        }
      }
    }
  }

  // three rounds of coordinate descent within one grid cell of the best point
  for (int round = 0; round < 3; ++round) {
    for (int d = 0; d < dims; ++d) {
      const double h =
          (result.search_box[d][1] - result.search_box[d][0]) / (resolution - 1);
      double a = std::max(result.search_box[d][0], best[d] - h);
      double b = std::min(result.search_box[d][1], best[d] + h);
      const auto slice = [&](double s) {
        std::vector<double> p = best;
        p[d] = s;
        return objective(p);
      };
      double x1 = b - kGolden * (b - a);
      double x2 = a + kGolden * (b - a);
      double f1 = slice(x1), f2 = slice(x2);
      for (int it = 0; it < 80 && b - a > 1e-13; ++it) {
        if (f1 > f2) {
          a = x1;
          x1 = x2;
          f1 = f2;
          x2 = a + kGolden * (b - a);
          f2 = slice(x2);
        } else {
          b = x2;
          x2 = x1;
          f2 = f1;
          x1 = b - kGolden * (b - a);
          f1 = slice(x1);
        }
      }
      const double s = 0.5 * (a + b);
      const double v = slice(s);
      if (v < best_val) {
        best_val = v;
        best[d] = s;
      }
    }
  }

  result.best_params = best;
  result.best_max_abs_psi = best_val;
  return result;
}

}  // namespace arcfit
