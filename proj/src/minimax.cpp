#include "arcfit/minimax.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

#include "arcfit/geometry.hpp"

namespace arcfit {

namespace {

double bisect(const std::function<double(double)>& f, double lo, double hi, double tol) {
  double flo = f(lo), fhi = f(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if (flo * fhi > 0.0) {
    throw std::runtime_error("minimax: bisection bracket has no sign change");
  }
  while (hi - lo > tol) {
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

// Newton polish steps with a numeric derivative; keeps the bisection result
// when the step would leave (lo, hi).
double polish(const std::function<double(double)>& f, double x, double lo, double hi) {
  for (int i = 0; i < 2; ++i) {
    const double h = 1e-7 * (1.0 + std::fabs(x));
    const double df = (f(x + h) - f(x - h)) / (2.0 * h);
    if (df == 0.0) break;
    const double next = x - f(x) / df;
    if (next > lo && next < hi) x = next;
  }
  return x;
}

// Dense-scan + bisection root listing for a smooth scalar function on (lo, hi).
std::vector<double> scan_roots(const std::function<double(double)>& f, double lo, double hi,
                               int samples, double tol) {
  std::vector<double> roots;
  double prev_x = lo, prev_f = f(lo);
  for (int i = 1; i <= samples; ++i) {
    const double x = lo + (hi - lo) * double(i) / samples;
    const double fx = f(x);
    if (prev_f == 0.0) {
      roots.push_back(prev_x);
    } else if (prev_f * fx < 0.0) {
      roots.push_back(bisect(f, prev_x, x, tol));
    }
    prev_x = x;
    prev_f = fx;
  }
  return roots;
}

// Gaussian elimination with partial pivoting; dimensions stay below 10.
std::vector<double> solve_dense(std::vector<std::vector<double>> a, std::vector<double> b) {
  const int n = int(b.size());
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    for (int r = col + 1; r < n; ++r) {
      if (std::fabs(a[r][col]) > std::fabs(a[pivot][col])) pivot = r;
    }
    if (a[pivot][col] == 0.0) throw std::runtime_error("minimax: singular exchange system");
    std::swap(a[pivot], a[col]);
    std::swap(b[pivot], b[col]);
    for (int r = col + 1; r < n; ++r) {
      const double factor = a[r][col] / a[col][col];
      for (int c = col; c < n; ++c) a[r][c] -= factor * a[col][c];
      b[r] -= factor * b[col];
    }
  }
  std::vector<double> x(n, 0.0);
  for (int r = n - 1; r >= 0; --r) {
    double s = b[r];
    for (int c = r + 1; c < n; ++c) s -= a[r][c] * x[c];
    x[r] = s / a[r][r];
  }
  return x;
}

double eval_poly(const std::vector<double>& coeffs, double x) {
  // coeffs[i] multiplies x^i
  double acc = 0.0;
  for (int i = int(coeffs.size()) - 1; i >= 0; --i) acc = acc * x + coeffs[i];
  return acc;
}

}  // namespace

double eval_minimax(const ConstrainedMinimaxPoly& poly, double t) {
  const double u = 1.0 - t * t;
  double acc = 1.0;
  for (int i = 0; i < poly.k + 1; ++i) acc *= u;
  for (double z : poly.positive_zeros) acc *= (t * t - z * z);
  return acc;
}

double q_star_at_zero(const ConstrainedMinimaxPoly& poly) {
  double acc = 1.0;
  for (double z : poly.positive_zeros) acc *= -z * z;
  return acc;
}

ConstrainedMinimaxPoly chebyshev_k0(int n) {
  if (n < 1) throw std::invalid_argument("chebyshev_k0: n must be >= 1");
  ConstrainedMinimaxPoly poly;
  poly.n = n;
  poly.k = 0;
  poly.family = "chebyshev_k0";
  const double scale = std::cos(kPi / (4.0 * n));
  for (int j = n; j >= 2; --j) {
    poly.positive_zeros.push_back(std::cos((2.0 * j - 1.0) * kPi / (4.0 * n)) / scale);
  }
  poly.norm = std::pow(2.0, 1.0 - 2.0 * n) / std::pow(scale, 2.0 * n);
  return poly;
}

ConstrainedMinimaxPoly penultimate_case(int n) {
  if (n < 2) throw std::invalid_argument("penultimate_case: n must be >= 2");
  const auto f = [n](double a) { return std::pow(a, n) + n * a - (n - 1.0); };
  const double hi = 1.0 - 1.0 / n;
  if (!(f(0.0) < 0.0) || !(f(hi) > 0.0)) {
    throw std::runtime_error("penultimate_case: bracket sign check failed");
  }
  double a = bisect(f, 0.0, hi, 1e-14);
  a = polish(f, a, 0.0, hi);
  ConstrainedMinimaxPoly poly;
  poly.n = n;
  poly.k = n - 2;
  poly.family = "penultimate";
  const double t1 = std::sqrt(1.0 - n * a / (n - 1.0));
  poly.positive_zeros = {t1};
  poly.norm = t1 * t1;  // |p*(0)|; t = 0 is an alternation point
  return poly;
}

ConstrainedMinimaxPoly antepenultimate_case(int n) {
  if (n < 3) throw std::invalid_argument("antepenultimate_case: n must be >= 3");
  const double nn = n;
  const auto zeta = [nn](double lam) {
    return std::pow(lam, nn) - nn / (nn - 2.0) * std::pow(lam, nn - 1.0) -
           nn / (nn - 2.0) * lam + 1.0;
  };
  double lambda = bisect(zeta, 0.0, 1.0, 1e-14);
  lambda = polish(zeta, lambda, 0.0, 1.0);

  // First equality of the alternation conditions: p*(0) = -p*(sqrt(1-a)),
  // with b = lambda a and g(s) the quadratic factor in s = 1 - t^2.
  const auto g = [nn, lambda](double s, double a) {
    return -s * s + nn / (nn - 1.0) * a * (1.0 + lambda) * s -
           nn / (nn - 2.0) * lambda * a * a;
  };
  const auto cond = [nn, &g](double a) {
    return g(1.0, a) + std::pow(a, nn - 2.0) * g(a, a);
  };
  if (!(cond(0.0) < 0.0) || !(cond(1.0) > 0.0)) {
    throw std::runtime_error("antepenultimate_case: bracket sign check failed");
  }
  double a = bisect(cond, 0.0, 1.0, 1e-14);
  a = polish(cond, a, 0.0, 1.0);
  const double b = lambda * a;

  // Positive zeros via s^2 - n/(n-1) (a+b) s + n/(n-2) ab = 0, t = sqrt(1-s).
  const double B = nn / (nn - 1.0) * (a + b);
  const double C = nn / (nn - 2.0) * a * b;
  const double disc = B * B - 4.0 * C;
  if (!(disc > 0.0)) throw std::runtime_error("antepenultimate_case: negative discriminant");
  const double s_hi = 0.5 * (B + std::sqrt(disc));
  const double s_lo = 0.5 * (B - std::sqrt(disc));
  if (!(s_lo > 0.0) || !(s_hi < 1.0)) {
    throw std::runtime_error("antepenultimate_case: zero factor outside (0, 1)");
  }
  ConstrainedMinimaxPoly poly;
  poly.n = n;
  poly.k = n - 3;
  poly.family = "antepenultimate";
  poly.positive_zeros = {std::sqrt(1.0 - s_hi), std::sqrt(1.0 - s_lo)};
  poly.norm = poly.positive_zeros[0] * poly.positive_zeros[0] * poly.positive_zeros[1] *
              poly.positive_zeros[1];
  return poly;
}

ConstrainedMinimaxPoly remez_general(int n, int k, double tol) {
  if (k < 0 || k >= n) throw std::invalid_argument("remez_general: need 0 <= k < n");
  if (!(tol > 0.0)) throw std::invalid_argument("remez_general: tol must be positive");
  const int m = n - k - 1;  // number of positive zeros of q
  ConstrainedMinimaxPoly poly;
  poly.n = n;
  poly.k = k;
  poly.family = "remez";
  if (m == 0) {
    // q == 1; p* = (1-t^2)^(k+1), extremal only at t = 0.
    poly.norm = 1.0;
    return poly;
  }

  // Work on u = t^2 in [0, 1]: minimize max |(1-u)^(k+1) q(u)| over monic q of
  // degree m. References: u_0 = 0 plus the m interior alternation points.
  const auto weight = [k](double u) { return std::pow(1.0 - u, k + 1); };
  std::vector<double> refs(m + 1, 0.0);
  for (int j = 1; j <= m; ++j) {
    const double t = std::cos(double(m + 1 - j) * kPi / (2.0 * m + 1.0));
    refs[j] = t * t;
  }
  const double sigma = (m % 2 == 0) ? 1.0 : -1.0;  // sign of p* at t = 0

  std::vector<double> q(m + 1, 0.0);  // monomial coefficients in u, q[m] = 1
  double level = 0.0;
  const int max_iter = 200;
  double residual = 1.0;
  for (int iter = 0; iter < max_iter; ++iter) {
    // Linear solve: sum_i c_i w_j u_j^i - sigma (-1)^j h = -w_j u_j^m.
    std::vector<std::vector<double>> A(m + 1, std::vector<double>(m + 1, 0.0));
    std::vector<double> rhs(m + 1, 0.0);
    for (int j = 0; j <= m; ++j) {
      const double w = weight(refs[j]);
      double up = 1.0;
      for (int i = 0; i < m; ++i) {
        A[j][i] = w * up;
        up *= refs[j];
      }
      A[j][m] = -sigma * ((j % 2 == 0) ? 1.0 : -1.0);
      rhs[j] = -w * up;  // up == u_j^m here
    }
    const std::vector<double> sol = solve_dense(A, rhs);
    for (int i = 0; i < m; ++i) q[i] = sol[i];
    q[m] = 1.0;
    level = sol[m];

    // Interior extrema of (1-u)^(k+1) q(u): roots of (1-u) q'(u) - (k+1) q(u).
    std::vector<double> dq(m, 0.0);
    for (int i = 1; i <= m; ++i) dq[i - 1] = i * q[i];
    const auto stat = [&](double u) {
      return (1.0 - u) * eval_poly(dq, u) - (k + 1.0) * eval_poly(q, u);
    };
    std::vector<double> extrema = scan_roots(stat, 1e-12, 1.0 - 1e-12, 4096, 1e-15);
    if (int(extrema.size()) != m) {
      if (iter > 0) {
        throw std::runtime_error("remez_general: lost alternation points at iteration " +
                                 std::to_string(iter));
      }
      continue;  // initial references were poor; re-solve on the same refs
    }
    std::vector<double> next_refs(m + 1, 0.0);
    for (int j = 1; j <= m; ++j) next_refs[j] = extrema[j - 1];

    double vmax = 0.0, vmin = 1e300;
    for (int j = 0; j <= m; ++j) {
      const double v = std::fabs(weight(next_refs[j]) * eval_poly(q, next_refs[j]));
      vmax = std::max(vmax, v);
      vmin = std::min(vmin, v);
    }
    refs = next_refs;
    residual = (vmax - vmin) / vmax;
    if (residual <= tol) {
      poly.norm = vmax;
      const auto qf = [&](double u) { return eval_poly(q, u); };
      std::vector<double> uroots = scan_roots(qf, 0.0, 1.0, 8192, 1e-15);
      if (int(uroots.size()) != m) {
        throw std::runtime_error("remez_general: expected " + std::to_string(m) +
                                 " zeros, found " + std::to_string(uroots.size()));
      }
      for (double u : uroots) poly.positive_zeros.push_back(std::sqrt(u));
      std::sort(poly.positive_zeros.begin(), poly.positive_zeros.end());
      return poly;
    }
  }
  throw std::runtime_error("remez_general: no convergence after 200 iterations, residual " +
                           std::to_string(residual));
}

ConstrainedMinimaxPoly best_poly(int n, int k) {
  if (k == 0) return chebyshev_k0(n);
  if (k == n - 2) return penultimate_case(n);
  if (k == n - 3) return antepenultimate_case(n);
  return remez_general(n, k, 1e-13);
}

std::vector<double> alternation_points(const ConstrainedMinimaxPoly& poly) {
  const int samples = 8192;
  std::vector<double> ts(samples + 1), vals(samples + 1);
  for (int i = 0; i <= samples; ++i) {
    ts[i] = -1.0 + 2.0 * double(i) / samples;
    vals[i] = std::fabs(eval_minimax(poly, ts[i]));
  }
  std::vector<double> points;
  const double inv_gr = (std::sqrt(5.0) - 1.0) / 2.0;
  for (int i = 1; i < samples; ++i) {
    if (vals[i] >= vals[i - 1] && vals[i] >= vals[i + 1]) {
      double a = ts[i - 1], b = ts[i + 1];
      double c = b - inv_gr * (b - a);
      double d = a + inv_gr * (b - a);
      double fc = -std::fabs(eval_minimax(poly, c));
      double fd = -std::fabs(eval_minimax(poly, d));
      for (int it = 0; it < 90; ++it) {
        if (fc < fd) {
          b = d;
          d = c;
          fd = fc;
          c = b - inv_gr * (b - a);
          fc = -std::fabs(eval_minimax(poly, c));
        } else {
          a = c;
          c = d;
          fc = fd;
          d = a + inv_gr * (b - a);
          fd = -std::fabs(eval_minimax(poly, d));
        }
      }
      points.push_back(0.5 * (a + b));
    }
  }
  return points;
}

}  // namespace arcfit
