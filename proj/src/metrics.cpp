#include "arcfit/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "arcfit/fitter.hpp"

namespace arcfit {

namespace {

constexpr double kGolden = 0.61803398874989484820;

// Golden-section search for the maximum of f on [lo, hi] down to width tol.
template <typename F>
double golden_max(const F& f, double lo, double hi, double tol) {
  double a = lo, b = hi;
  double x1 = b - kGolden * (b - a);
  double x2 = a + kGolden * (b - a);
  double f1 = f(x1), f2 = f(x2);
  while (b - a > tol) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + kGolden * (b - a);
      f2 = f(x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - kGolden * (b - a);
      f1 = f(x1);
    }
  }
  return 0.5 * (a + b);
}

// Scans f on a uniform grid and refines every interior local maximum; returns
// (max value, argmax, whether any refinement ran).
template <typename F>
void scan_and_refine(const F& f, int samples, double* best_val, double* best_arg,
                     bool* refined) {
  const int m = samples;
  std::vector<double> ts(m), vs(m);
  for (int i = 0; i < m; ++i) {
    ts[i] = -1.0 + 2.0 * i / (m - 1);
    vs[i] = f(ts[i]);
  }
  *best_val = vs[0];
  *best_arg = ts[0];
  *refined = false;
  for (int i = 0; i < m; ++i) {
    if (vs[i] > *best_val) {
      *best_val = vs[i];
      *best_arg = ts[i];
    }
  }
  for (int i = 1; i + 1 < m; ++i) {
    if (vs[i] >= vs[i - 1] && vs[i] >= vs[i + 1]) {
      const double t = golden_max(f, ts[i - 1], ts[i + 1], 1e-12);
      const double v = f(t);
      *refined = true;
      if (v > *best_val) {
        *best_val = v;
        *best_arg = t;
      }
    }
  }
}

}  // namespace

double psi(const BezierCurve& curve, double t) {
  const Point2 p = eval_curve(curve, t);
  return dot(p, p) - 1.0;
}

double psi_tilde(const BezierCurve& curve, double t) {
  const Point2 p = eval_curve(curve, t);
  return std::abs(std::sqrt(dot(p, p)) - 1.0);
}

ErrorReport max_error(const BezierCurve& curve, int samples) {
  if (samples < 64) {
    throw std::invalid_argument("max_error: at least 64 samples are required");
  }
  ErrorReport report;
  report.num_samples = samples;

  const auto abs_psi = [&](double t) { return std::abs(psi(curve, t)); };
  const auto tilde = [&](double t) { return psi_tilde(curve, t); };

  bool refined_psi = false, refined_tilde = false;
  scan_and_refine(abs_psi, samples, &report.max_abs_psi, &report.max_psi_location,
                  &refined_psi);
  double arg_tilde = 0.0;
  scan_and_refine(tilde, samples, &report.hausdorff, &arg_tilde, &refined_tilde);
  report.refined = refined_psi || refined_tilde;

  // Radial projection is a bijection onto the arc only if the curve stays in
  // the annulus 0 < ||p|| < 2 and inside the angular fan of its endpoints.
  const Point2 p0 = eval_curve(curve, -1.0);
  const Point2 p1 = eval_curve(curve, 1.0);
  double theta_lo = std::atan2(p0.y, p0.x);
  double theta_hi = std::atan2(p1.y, p1.x);
  if (theta_lo > theta_hi) std::swap(theta_lo, theta_hi);
  const double angle_tol = 1e-9;
  bool valid = true;
  for (int i = 0; i < samples && valid; ++i) {
    const double t = -1.0 + 2.0 * i / (samples - 1);
    const Point2 p = eval_curve(curve, t);
    const double r = std::sqrt(dot(p, p));
    if (!(r > 0.0 && r < 2.0)) valid = false;
    const double theta = std::atan2(p.y, p.x);
    if (theta < theta_lo - angle_tol || theta > theta_hi + angle_tol) valid = false;
  }
  report.radial_projection_valid = valid;
  return report;
}

std::pair<double, double> convergence_order(int degree, int smoothness,
                                            const std::vector<double>& angles) {
  if (angles.size() < 3) {
    throw std::invalid_argument("convergence_order: at least three angles are required");
  }
  for (std::size_t i = 0; i < angles.size(); ++i) {
    if (!(angles[i] > 0.0 && angles[i] <= kPi / 2.0)) {
      throw std::domain_error("convergence_order: angles must lie in (0, pi/2]");
    }
    if (i > 0 && !(angles[i - 1] / angles[i] >= 1.5 - 1e-12)) {
      throw std::invalid_argument(
          "convergence_order: consecutive angles must decrease by a factor of at least 1.5");
    }
  }

  std::vector<double> xs, ys;
  xs.reserve(angles.size());
  ys.reserve(angles.size());
  for (const double phi : angles) {
    const FitResult fit = fit_case(degree, smoothness, ArcSpec(phi));
    xs.push_back(std::log(phi));
    ys.push_back(std::log(fit.max_abs_psi));
  }

  const double m = static_cast<double>(xs.size());
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sx += xs[i];
    sy += ys[i];
    sxx += xs[i] * xs[i];
    sxy += xs[i] * ys[i];
  }
  const double slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
  const double intercept = (sy - slope * sx) / m;
  return {slope, std::exp(intercept)};
}

}  // namespace arcfit
