#include "arcfit/fitter.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "arcfit/metrics.hpp"

namespace arcfit {

namespace {

constexpr double kMinAngle = 1e-8;
constexpr double kResidualTol = 1e-10;
constexpr double kStepTol = 1e-14;
constexpr int kMaxIter = 100;
constexpr double kRegionSlack = 1e-12;
constexpr double kSqrt3 = 1.7320508075688772935;

void check_angle(const ArcSpec& arc) {
  if (arc.half_angle() < kMinAngle) {
    throw std::domain_error(
        "fit: half-angle below 1e-8 makes the interpolation system numerically "
        "singular; the asymptotic closed forms are the right tool at that scale");
  }
}

// Real roots of a x^2 + b x + c = 0, numerically stable form.
std::vector<double> quadratic_real_roots(double a, double b, double c) {
  std::vector<double> roots;
  if (a == 0.0) {
    if (b != 0.0) roots.push_back(-c / b);
    return roots;
  }
  const double disc = b * b - 4.0 * a * c;
  if (disc < 0.0) return roots;
  const double sq = std::sqrt(disc);
  const double q = -0.5 * (b + (b >= 0.0 ? sq : -sq));
  roots.push_back(q / a);
  if (q != 0.0) {
    roots.push_back(c / q);
  } else {
    roots.push_back(0.0);
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

// Quadratic coefficients of s -> f(s) from samples at s = 0, 1, 2.
void quad_from_samples(double f0, double f1, double f2, double* a, double* b, double* c) {
  *a = 0.5 * (f2 - 2.0 * f1 + f0);
  *b = f1 - f0 - *a;
  *c = f0;
}

struct Root2 {
  double x = 0.0;
  double y = 0.0;
  double residual = 0.0;
};

using Fn2 = std::function<std::array<double, 2>(double, double)>;

// Damped Newton with a central-difference Jacobian (exact here: the residuals
// are quadratic in the parameters).
bool newton2(const Fn2& F, double x0, double y0, Root2* out) {
  auto res_norm = [](const std::array<double, 2>& v) {
    return std::max(std::abs(v[0]), std::abs(v[1]));
  };
  double x = x0, y = y0;
  std::array<double, 2> f = F(x, y);
  double res = res_norm(f);
  // no residual-based early exit: iterate until the step or the improvement
  // bottoms out, which polishes roots down to the machine noise floor
  for (int iter = 0; iter < kMaxIter && std::isfinite(res) && res != 0.0; ++iter) {
    const double hx = 1e-6 * (1.0 + std::abs(x));
    const double hy = 1e-6 * (1.0 + std::abs(y));
    const std::array<double, 2> fxp = F(x + hx, y), fxm = F(x - hx, y);
    const std::array<double, 2> fyp = F(x, y + hy), fym = F(x, y - hy);
    const double j00 = (fxp[0] - fxm[0]) / (2.0 * hx);
    const double j10 = (fxp[1] - fxm[1]) / (2.0 * hx);
    const double j01 = (fyp[0] - fym[0]) / (2.0 * hy);
    const double j11 = (fyp[1] - fym[1]) / (2.0 * hy);
    const double det = j00 * j11 - j01 * j10;
    if (!(std::abs(det) > 1e-300)) break;
    const double dx = (f[0] * j11 - f[1] * j01) / det;
    const double dy = (j00 * f[1] - j10 * f[0]) / det;
    double lambda = 1.0;
    bool moved = false;
    for (int halve = 0; halve < 40; ++halve) {
      const double nx = x - lambda * dx, ny = y - lambda * dy;
      const std::array<double, 2> fn = F(nx, ny);
      const double rn = res_norm(fn);
      if (std::isfinite(rn) && rn < res) {
        x = nx;
        y = ny;
        f = fn;
        res = rn;
        moved = true;
        break;
      }
      lambda *= 0.5;
    }
    if (!moved) break;
    if (lambda * std::hypot(dx, dy) < kStepTol * (1.0 + std::abs(x) + std::abs(y))) break;
  }
  out->x = x;
  out->y = y;
  out->residual = res;
  return std::isfinite(res) && res < kResidualTol;
}

// All sign-change roots of g on [lo, hi] from a uniform scan plus bisection.
std::vector<double> scan_roots_1d(const std::function<double(double)>& g, double lo,
                                  double hi, int samples) {
  std::vector<double> roots;
  if (!(hi > lo)) return roots;
  double prev_t = lo;
  double prev_v = g(lo);
  for (int i = 1; i <= samples; ++i) {
    const double t = lo + (hi - lo) * i / samples;
    const double v = g(t);
    if (prev_v == 0.0) {
      roots.push_back(prev_t);
    } else if (std::isfinite(prev_v) && std::isfinite(v) && prev_v * v < 0.0) {
      double a = prev_t, b = t, fa = prev_v;
      while (b - a > 1e-15 * (1.0 + std::abs(b))) {
        const double mid = 0.5 * (a + b);
        const double fm = g(mid);
        if (fm == 0.0) {
          a = b = mid;
          break;
        }
        if (fa * fm < 0.0) {
          b = mid;
        } else {
          a = mid;
          fa = fm;
        }
      }
      roots.push_back(0.5 * (a + b));
    }
    prev_t = t;
    prev_v = v;
  }
  if (prev_v == 0.0) roots.push_back(prev_t);
  return roots;
}

constexpr double kGolden = 0.61803398874989484820;

double golden_max_abs(const std::function<double(double)>& f, double lo, double hi) {
  double a = lo, b = hi;
  double x1 = b - kGolden * (b - a);
  double x2 = a + kGolden * (b - a);
  double f1 = std::abs(f(x1)), f2 = std::abs(f(x2));
  while (b - a > 1e-12) {
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

double dense_abs_max(const std::function<double(double)>& f, double lo, double hi,
                     int samples) {
  double best = 0.0;
  std::vector<double> vs(samples + 1);
  for (int i = 0; i <= samples; ++i) {
    vs[i] = std::abs(f(lo + (hi - lo) * i / samples));
    best = std::max(best, vs[i]);
  }
  for (int i = 1; i < samples; ++i) {
    if (vs[i] >= vs[i - 1] && vs[i] >= vs[i + 1]) {
      const double a = lo + (hi - lo) * (i - 1) / samples;
      const double b = lo + (hi - lo) * (i + 1) / samples;
      best = std::max(best, golden_max_abs(f, a, b));
    }
  }
  return best;
}

// C as the proportionality ratio psi / p, taken where |p| is largest; needed
// when the prescribed polynomial vanishes at t = 0.
double c_ratio(const BezierCurve& curve, const ConstrainedMinimaxPoly& poly) {
  double best_t = 0.0, best_p = 0.0;
  const int m = 4096;
  for (int i = 0; i <= m; ++i) {
    const double t = -1.0 + 2.0 * i / m;
    const double v = std::abs(eval_minimax(poly, t));
    if (v > best_p) {
      best_p = v;
      best_t = t;
    }
  }
  if (!(best_p > 0.0)) {
    throw std::invalid_argument("c_ratio: polynomial vanishes identically");
  }
  return psi(curve, best_t) / eval_minimax(poly, best_t);
}

double c_for(const BezierCurve& curve, const ConstrainedMinimaxPoly& poly) {
  if (q_star_at_zero(poly) != 0.0) return compute_C(curve, poly);
  return c_ratio(curve, poly);
}

FitResult make_result(const GkScaffold& scaffold, std::vector<double> params,
                      ConstrainedMinimaxPoly poly, int branch_count) {
  FitResult result;
  result.curve = instantiate(scaffold, params);
  result.params = std::move(params);
  result.minimax_poly = std::move(poly);
  result.branch_count = branch_count;
  result.c_constant = c_for(result.curve, result.minimax_poly);
  const ErrorReport report = max_error(result.curve, 10000);
  result.max_abs_psi = report.max_abs_psi;
  result.hausdorff = report.hausdorff;
  return result;
}

using Condition = std::function<double(const BezierCurve&)>;

// Translate the prescribed-zeros encoding into interpolation conditions; see
// the header comment on fit_prescribed_zeros.
std::vector<Condition> build_conditions(int degree, int smoothness,
                                        const std::vector<double>& zeros) {
  const int expected = degree - smoothness - 1;
  if (static_cast<int>(zeros.size()) != expected) {
    throw std::invalid_argument("fit_prescribed_zeros: expected " +
                                std::to_string(expected) + " zeros, got " +
                                std::to_string(zeros.size()));
  }
  for (std::size_t i = 0; i < zeros.size(); ++i) {
    if (!(zeros[i] >= 0.0 && zeros[i] <= 1.0)) {
      throw std::invalid_argument("fit_prescribed_zeros: zeros must lie in [0, 1]");
    }
    if (i > 0 && zeros[i] < zeros[i - 1]) {
      throw std::invalid_argument("fit_prescribed_zeros: zeros must be sorted");
    }
  }
  std::vector<Condition> conditions;
  std::size_t i = 0;
  while (i < zeros.size()) {
    const double v = zeros[i];
    std::size_t count = 1;
    while (i + count < zeros.size() && zeros[i + count] == v) ++count;
    if (count > 2) {
      throw std::invalid_argument(
          "fit_prescribed_zeros: zero multiplicity above 2 is not supported");
    }
    if (v == 0.0) {
      conditions.push_back(
          [](const BezierCurve& c) { return psi_derivatives(c, 0.0, 0)[0]; });
      if (count == 2) {
        conditions.push_back(
            [](const BezierCurve& c) { return psi_derivatives(c, 0.0, 2)[2]; });
      }
    } else if (v == 1.0) {
      conditions.push_back(
          [](const BezierCurve& c) { return psi_derivatives(c, -1.0, 2)[2]; });
      if (count == 2) {
        conditions.push_back(
            [](const BezierCurve& c) { return psi_derivatives(c, -1.0, 3)[3]; });
      }
    } else {
      conditions.push_back(
          [v](const BezierCurve& c) { return psi_derivatives(c, v, 0)[0]; });
      if (count == 2) {
        conditions.push_back(
            [v](const BezierCurve& c) { return psi_derivatives(c, v, 1)[1]; });
      }
    }
    i += count;
  }
  return conditions;
}

// Admissible-root bookkeeping shared by the 2-parameter solvers.
std::vector<Root2> solve_2d(const Fn2& F, const std::vector<std::array<double, 2>>& seeds,
                            const std::function<bool(double, double)>& admissible,
                            std::string* failure_note) {
  std::vector<Root2> roots;
  std::ostringstream endpoints;
  for (const auto& seed : seeds) {
    Root2 root;
    const bool ok = newton2(F, seed[0], seed[1], &root);
    endpoints << "  seed (" << seed[0] << ", " << seed[1] << ") -> (" << root.x << ", "
              << root.y << "), residual " << root.residual << "\n";
    if (!ok) continue;
    if (!admissible(root.x, root.y)) continue;
    bool duplicate = false;
    for (const Root2& r : roots) {
      if (std::abs(r.x - root.x) < 1e-8 && std::abs(r.y - root.y) < 1e-8) {
        duplicate = true;
        break;
      }
    }
    if (!duplicate) roots.push_back(root);
  }
  std::sort(roots.begin(), roots.end(), [](const Root2& a, const Root2& b) {
    return a.x != b.x ? a.x < b.x : a.y < b.y;
  });
  if (failure_note) *failure_note = endpoints.str();
  return roots;
}

std::vector<std::array<double, 2>> grid_seeds(double x_lo, double x_hi, double y_lo,
                                              double y_hi, int per_side) {
  std::vector<std::array<double, 2>> seeds;
  for (int i = 0; i < per_side; ++i) {
    for (int j = 0; j < per_side; ++j) {
      seeds.push_back({x_lo + (x_hi - x_lo) * i / (per_side - 1),
                       y_lo + (y_hi - y_lo) * j / (per_side - 1)});
    }
  }
  return seeds;
}

}  // namespace

double compute_C(const BezierCurve& curve, const ConstrainedMinimaxPoly& poly) {
  const double q0 = q_star_at_zero(poly);
  if (q0 == 0.0 || !std::isfinite(q0)) {
    throw std::invalid_argument(
        "compute_C: q*(0) = 0; the polynomial's zeros must be strictly positive");
  }
  return psi(curve, 0.0) / q0;
}

EllipsePair cubic_g0_ellipses(const ArcSpec& arc) {
  const double c = std::cos(arc.half_angle());
  const double s = std::sin(arc.half_angle());
  EllipsePair pair;
  pair.centers[0] = {(3.0 - 4.0 * kSqrt3) * c / 9.0, -(3.0 + 4.0 * kSqrt3) * s / 9.0};
  pair.centers[1] = {-(3.0 + 8.0 * kSqrt3) * c / 9.0, -(9.0 + 8.0 * kSqrt3) * s / 9.0};
  pair.semiaxes[0] = {2.0 * (3.0 + 2.0 * kSqrt3) / 9.0, 2.0 * (12.0 + 7.0 * kSqrt3) / 9.0};
  pair.semiaxes[1] = {4.0 * (3.0 + 2.0 * kSqrt3) / 9.0, 2.0 * (9.0 + 5.0 * kSqrt3) / 9.0};
  return pair;
}

std::array<double, 4> cubic_g0_boundary_crossings(const ArcSpec& arc) {
  const double phi = arc.half_angle();
  const double c = std::cos(phi), s = std::sin(phi);
  const double c2 = std::cos(2.0 * phi);
  const double sh = std::sin(0.5 * phi);
  const double xi1 = (3.0 - 4.0 * kSqrt3) * c / 9.0 +
                     std::sqrt((19.0 + 52.0 * kSqrt3) / 54.0 +
                               (37.0 - 20.0 * kSqrt3) * c2 / 54.0);
  const double xi2 = -(3.0 + 8.0 * kSqrt3) * c / 9.0 +
                     std::sqrt((74.0 + 59.0 * kSqrt3) / 27.0 +
                               (38.0 + 5.0 * kSqrt3) * c2 / 27.0);
  const double eta1 = -(3.0 + 4.0 * kSqrt3) * s / 9.0 +
                      std::sqrt(2.0 * (199.0 + 116.0 * kSqrt3) / 27.0 +
                                2.0 * (37.0 + 20.0 * kSqrt3) * c / 27.0) *
                          sh;
  const double eta2 = -(9.0 + 8.0 * kSqrt3) * s / 9.0 +
                      std::sqrt((362.0 + 213.0 * kSqrt3) / 27.0 +
                                (182.0 + 99.0 * kSqrt3) * c / 27.0) *
                          sh;
  return {xi1, xi2, eta1, eta2};
}

std::array<double, 4> quartic_g1_boundary_values(const ArcSpec& arc) {
  check_angle(arc);
  const ConstrainedMinimaxPoly poly = antepenultimate_case(4);
  const GkScaffold scaffold(4, 1, arc);
  std::array<double, 4> out{};
  for (int i = 0; i < 2; ++i) {
    const double t = poly.positive_zeros[i];
    const auto along_d = [&](double d) {
      return psi(instantiate(scaffold, {d, 1.0}), t);
    };
    const auto along_xi = [&](double xi) {
      return psi(instantiate(scaffold, {0.0, xi}), t);
    };
    double a, b, c;
    quad_from_samples(along_d(0.0), along_d(1.0), along_d(2.0), &a, &b, &c);
    double best_d = -1.0;
    for (double r : quadratic_real_roots(a, b, c)) {
      if (r > kRegionSlack && (best_d < 0.0 || r < best_d)) best_d = r;
    }
    quad_from_samples(along_xi(0.0), along_xi(1.0), along_xi(2.0), &a, &b, &c);
    double best_xi = -1.0;
    for (double r : quadratic_real_roots(a, b, c)) {
      if (r > 1.0 + kRegionSlack && (best_xi < 0.0 || r < best_xi)) best_xi = r;
    }
    if (best_d < 0.0 || best_xi < 0.0) {
      throw std::runtime_error(
          "quartic G1: boundary system has no admissible root at this angle");
    }
    out[i] = best_d;
    out[i + 2] = best_xi;
  }
  return out;
}

FitResult fit_quadratic_g0(const ArcSpec& arc) {
  check_angle(arc);
  const double c = std::cos(arc.half_angle());
  const double sqrt2 = std::sqrt(2.0);
  const double xi = -sqrt2 * c + std::sqrt(2.0 + 2.0 * sqrt2 + c * c);
  if (!(xi > kRegionSlack)) {
    throw std::runtime_error("quadratic G0: solution left the region xi > 0");
  }
  return make_result(GkScaffold(2, 0, arc), {xi}, chebyshev_k0(2), 1);
}

FitResult fit_cubic_g0(const ArcSpec& arc) {
  check_angle(arc);
  const ConstrainedMinimaxPoly poly = chebyshev_k0(3);
  const double t1 = poly.positive_zeros[0];
  const double t2 = poly.positive_zeros[1];
  const GkScaffold scaffold(3, 0, arc);

  const std::array<double, 4> crossing = cubic_g0_boundary_crossings(arc);
  if (!((crossing[0] - crossing[1]) * (crossing[2] - crossing[3]) < 0.0)) {
    throw std::runtime_error(
        "cubic G0: boundary crossings violate the bracketing sign relation");
  }
  const Fn2 F = [&](double xi, double eta) -> std::array<double, 2> {
    const BezierCurve curve = instantiate(scaffold, {xi, eta});
    return {psi(curve, t1), psi(curve, t2)};
  };
  Root2 root;
  const bool ok = newton2(F, 0.5 * (crossing[0] + crossing[1]),
                          0.5 * (crossing[2] + crossing[3]), &root);
  if (!ok) {
    std::ostringstream msg;
    msg << "cubic G0: Newton failed to converge; endpoint (" << root.x << ", " << root.y
        << "), residual " << root.residual;
    throw std::runtime_error(msg.str());
  }
  if (!(root.x > 1.0 - kRegionSlack && root.y > kRegionSlack)) {
    std::ostringstream msg;
    msg << "cubic G0: solution (" << root.x << ", " << root.y
        << ") lies outside the admissible region {xi > 1, eta > 0}";
    throw std::runtime_error(msg.str());
  }
  return make_result(scaffold, {root.x, root.y}, poly, 1);
}

FitResult fit_cubic_g1(const ArcSpec& arc) {
  check_angle(arc);
  const double phi = arc.half_angle();
  const double b = std::cbrt(std::sqrt(2.0) - 1.0);
  const double A = 9.0 * (b * b - 1.0) * (1.0 + std::cos(2.0 * phi)) + 12.0 * b;
  const double B = -4.0 * std::sin(2.0 * phi) * (3.0 * b * b - 2.0 * b - 3.0);
  const double C = 8.0 * std::sin(phi) * std::sin(phi) * ((b - 1.0) * (b - 1.0) - 2.0);
  if (!(C < 0.0)) {
    throw std::runtime_error("cubic G1: quadratic in d lost its negative constant term");
  }
  double d = -1.0;
  for (double r : quadratic_real_roots(A, B, C)) {
    if (r > 0.0) d = r;
  }
  if (!(d > 0.0)) {
    throw std::runtime_error("cubic G1: quadratic in d has no positive root");
  }
  return make_result(GkScaffold(3, 1, arc), {d}, penultimate_case(3), 1);
}

FitResult fit_quartic_g1(const ArcSpec& arc) {
  check_angle(arc);
  const ConstrainedMinimaxPoly poly = antepenultimate_case(4);
  const double t1 = poly.positive_zeros[0];
  const double t2 = poly.positive_zeros[1];
  const GkScaffold scaffold(4, 1, arc);

  const std::array<double, 4> bv = quartic_g1_boundary_values(arc);
  const double d_lo = 0.5 * std::min(bv[0], bv[1]);
  const double d_hi = 1.25 * std::max(bv[0], bv[1]);
  const double xi_lo = 1.0 + 1e-6;
  const double xi_hi = std::max(std::max(bv[2], bv[3]), xi_lo + 0.1);

  const Fn2 F = [&](double d, double xi) -> std::array<double, 2> {
    const BezierCurve curve = instantiate(scaffold, {d, xi});
    return {psi(curve, t1), psi(curve, t2)};
  };
  const auto admissible = [](double d, double xi) {
    return d > kRegionSlack && xi > 1.0 + kRegionSlack;
  };
  std::string note;
  const std::vector<Root2> roots =
      solve_2d(F, grid_seeds(d_lo, d_hi, xi_lo, xi_hi, 5), admissible, &note);
  if (roots.empty()) {
    throw std::runtime_error(
        "quartic G1: no admissible solution found in {xi > 1, d > 0}; Newton endpoints:\n" +
        note);
  }
  int best = 0;
  double best_abs_c = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < roots.size(); ++i) {
    const BezierCurve curve = instantiate(scaffold, {roots[i].x, roots[i].y});
    const double c = compute_C(curve, poly);
    if (std::abs(c) < best_abs_c) {
      best_abs_c = std::abs(c);
      best = static_cast<int>(i);
    }
  }
  return make_result(scaffold, {roots[best].x, roots[best].y}, poly,
                     static_cast<int>(roots.size()));
}

FitResult fit_quartic_g2(const ArcSpec& arc) {
  check_angle(arc);
  const ConstrainedMinimaxPoly poly = penultimate_case(4);
  const double t1 = poly.positive_zeros[0];
  const GkScaffold scaffold(4, 2, arc);
  const double c = std::cos(arc.half_angle());

  const auto g = [&](double xi) { return psi(instantiate(scaffold, {xi}), t1); };
  double lo = 1.0 + 1e-12;
  double hi = c > 1e-12 ? std::min((1.0 - 1e-9) / c, 8.0) : 8.0;
  std::vector<double> roots = scan_roots_1d(g, lo, hi, 2048);
  if (roots.empty()) {
    // one widened retry before giving up
    lo = 1.0 + 1e-13;
    hi = c > 1e-12 ? std::min((1.0 - 1e-12) / c, 64.0) : 64.0;
    roots = scan_roots_1d(g, lo, hi, 8192);
  }
  if (roots.empty()) {
    std::ostringstream msg;
    msg << "quartic G2: no root of psi(t1) = 0 bracketed on (1, " << hi << ")";
    throw std::runtime_error(msg.str());
  }
  double best_xi = roots[0];
  double best_abs_c = std::numeric_limits<double>::infinity();
  for (double r : roots) {
    const double cc = compute_C(instantiate(scaffold, {r}), poly);
    if (std::abs(cc) < best_abs_c) {
      best_abs_c = std::abs(cc);
      best_xi = r;
    }
  }
  return make_result(scaffold, {best_xi}, poly, static_cast<int>(roots.size()));
}

FitResult fit_case(int degree, int smoothness, const ArcSpec& arc) {
  if (degree == 2 && smoothness == 0) return fit_quadratic_g0(arc);
  if (degree == 3 && smoothness == 0) return fit_cubic_g0(arc);
  if (degree == 3 && smoothness == 1) return fit_cubic_g1(arc);
  if (degree == 4 && smoothness == 1) return fit_quartic_g1(arc);
  if (degree == 4 && smoothness == 2) return fit_quartic_g2(arc);
  throw std::invalid_argument("fit_case: unsupported (degree, smoothness) pair (" +
                              std::to_string(degree) + ", " + std::to_string(smoothness) +
                              ")");
}

FitResult fit_prescribed_zeros(int degree, int smoothness,
                               const std::vector<double>& positive_zeros,
                               const ArcSpec& arc) {
  check_angle(arc);
  if (!case_supported(degree, smoothness)) {
    throw std::invalid_argument("fit_prescribed_zeros: unsupported (degree, smoothness)");
  }
  const std::vector<Condition> conditions =
      build_conditions(degree, smoothness, positive_zeros);
  const GkScaffold scaffold(degree, smoothness, arc);

  ConstrainedMinimaxPoly poly;
  poly.n = degree;
  poly.k = smoothness;
  poly.positive_zeros = positive_zeros;
  std::sort(poly.positive_zeros.begin(), poly.positive_zeros.end());
  poly.family = "prescribed";
  poly.norm = dense_abs_max([&](double t) { return eval_minimax(poly, t); }, -1.0, 1.0, 8192);

  if (conditions.size() == 1) {
    const auto g = [&](double s) { return conditions[0](instantiate(scaffold, {s})); };
    double lo, hi, lo2, hi2;
    if (degree == 2) {
      lo = 1e-6, hi = 8.0, lo2 = 1e-9, hi2 = 32.0;
    } else if (degree == 3) {
      lo = 1e-9, hi = 4.0, lo2 = 1e-12, hi2 = 16.0;
    } else {  // (4, 2)
      const double c = std::cos(arc.half_angle());
      lo = 1.0 + 1e-12;
      hi = c > 1e-12 ? std::min((1.0 - 1e-9) / c, 8.0) : 8.0;
      lo2 = 1.0 + 1e-13;
      hi2 = c > 1e-12 ? std::min((1.0 - 1e-12) / c, 64.0) : 64.0;
    }
    std::vector<double> roots = scan_roots_1d(g, lo, hi, 2048);
    if (roots.empty()) roots = scan_roots_1d(g, lo2, hi2, 8192);
    if (roots.empty()) {
      throw std::runtime_error("fit_prescribed_zeros: no root bracketed for the scalar case");
    }
    double best_s = roots[0];
    double best_abs_c = std::numeric_limits<double>::infinity();
    for (double r : roots) {
      const double cc = c_for(instantiate(scaffold, {r}), poly);
      if (std::abs(cc) < best_abs_c) {
        best_abs_c = std::abs(cc);
        best_s = r;
      }
    }
    return make_result(scaffold, {best_s}, poly, static_cast<int>(roots.size()));
  }

  // two free parameters: (3,0) in (xi, eta) or (4,1) in (d, xi)
  const Fn2 F = [&](double u, double v) -> std::array<double, 2> {
    const BezierCurve curve = instantiate(scaffold, {u, v});
    return {conditions[0](curve), conditions[1](curve)};
  };
  std::vector<std::array<double, 2>> seeds;
  std::function<bool(double, double)> admissible;
  if (degree == 3) {  // (xi, eta)
    const std::array<double, 4> crossing = cubic_g0_boundary_crossings(arc);
    seeds.push_back({0.5 * (crossing[0] + crossing[1]), 0.5 * (crossing[2] + crossing[3])});
    const auto extra = grid_seeds(1.0 + 1e-6, 1.7, 0.05, 1.5, 5);
    seeds.insert(seeds.end(), extra.begin(), extra.end());
    admissible = [](double xi, double eta) {
      return xi > 1.0 - kRegionSlack && eta > kRegionSlack;
    };
  } else {  // (4,1): (d, xi)
    // boundary quadratics of the prescribed conditions, where they have roots
    double d_lo = 0.05, d_hi = 1.2, xi_hi = 1.7;
    std::vector<double> d_roots, xi_roots;
    for (const Condition& cond : conditions) {
      double a, b, cq;
      const auto along_d = [&](double d) { return cond(instantiate(scaffold, {d, 1.0})); };
      quad_from_samples(along_d(0.0), along_d(1.0), along_d(2.0), &a, &b, &cq);
      for (double r : quadratic_real_roots(a, b, cq)) {
        if (r > kRegionSlack && r < 4.0) d_roots.push_back(r);
      }
      const auto along_xi = [&](double xi) { return cond(instantiate(scaffold, {0.0, xi})); };
      quad_from_samples(along_xi(0.0), along_xi(1.0), along_xi(2.0), &a, &b, &cq);
      for (double r : quadratic_real_roots(a, b, cq)) {
        if (r > 1.0 + kRegionSlack && r < 4.0) xi_roots.push_back(r);
      }
    }
    if (!d_roots.empty()) {
      d_lo = 0.5 * *std::min_element(d_roots.begin(), d_roots.end());
      d_hi = 1.25 * *std::max_element(d_roots.begin(), d_roots.end());
    }
    if (!xi_roots.empty()) {
      xi_hi = std::max(*std::max_element(xi_roots.begin(), xi_roots.end()), 1.1);
    }
    seeds = grid_seeds(d_lo, d_hi, 1.0 + 1e-6, xi_hi, 5);
    const auto extra = grid_seeds(0.05, 1.2, 1.0 + 1e-6, 1.7, 5);
    seeds.insert(seeds.end(), extra.begin(), extra.end());
    admissible = [](double d, double xi) {
      return d > kRegionSlack && xi > 1.0 + kRegionSlack;
    };
  }
  std::string note;
  const std::vector<Root2> roots = solve_2d(F, seeds, admissible, &note);
  if (roots.empty()) {
    throw std::runtime_error(
        "fit_prescribed_zeros: no admissible solution found; Newton endpoints:\n" + note);
  }
  int best = 0;
  double best_abs_c = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < roots.size(); ++i) {
    const double cc = c_for(instantiate(scaffold, {roots[i].x, roots[i].y}), poly);
    if (std::abs(cc) < best_abs_c) {
      best_abs_c = std::abs(cc);
      best = static_cast<int>(i);
    }
  }
  return make_result(scaffold, {roots[best].x, roots[best].y}, poly,
                     static_cast<int>(roots.size()));
}

}  // namespace arcfit
