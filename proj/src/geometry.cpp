#include "arcfit/geometry.hpp"

#include <cmath>
#include <string>

namespace arcfit {

ArcSpec::ArcSpec(double half_angle) : half_angle_(half_angle) {
  if (!(half_angle > 0.0) || !(half_angle <= kPi / 2.0)) {
    throw std::domain_error("arc half-angle must lie in (0, pi/2], got " +
                            std::to_string(half_angle));
  }
}

double binomial(int n, int j) {
  if (j < 0 || j > n) return 0.0;
  double c = 1.0;
  for (int i = 1; i <= j; ++i) {
    c = c * double(n - j + i) / double(i);
  }
  return c;
}

double bernstein(int n, int j, double t) {
  if (n < 0 || j < 0 || j > n) {
    throw std::domain_error("bernstein: index out of range");
  }
  if (t < -1.0 || t > 1.0) {
    throw std::domain_error("bernstein: t outside [-1, 1]");
  }
  const double u = 0.5 * (1.0 + t);
  return binomial(n, j) * std::pow(u, j) * std::pow(1.0 - u, n - j);
}

namespace {

// de Casteljau core; a stack buffer keeps the hot path allocation-free for
// the degrees this library works with.
Point2 de_casteljau(const BezierCurve& curve, double u) {
  constexpr int kStackDegree = 15;
  if (curve.degree <= kStackDegree) {
    Point2 pts[kStackDegree + 1];
    for (int j = 0; j <= curve.degree; ++j) pts[j] = curve.control_points[j];
    for (int level = curve.degree; level > 0; --level) {
      for (int j = 0; j < level; ++j) {
        pts[j] = (1.0 - u) * pts[j] + u * pts[j + 1];
      }
    }
    return pts[0];
  }
  std::vector<Point2> pts = curve.control_points;
  for (int level = curve.degree; level > 0; --level) {
    for (int j = 0; j < level; ++j) {
      pts[j] = (1.0 - u) * pts[j] + u * pts[j + 1];
    }
  }
  return pts[0];
}

}  // namespace

Point2 eval_curve(const BezierCurve& curve, double t) {
  if (t < -1.0 || t > 1.0) {
    throw std::domain_error("eval_curve: t outside [-1, 1]");
  }
  if (curve.control_points.size() != size_t(curve.degree) + 1) {
    throw std::invalid_argument("eval_curve: control point count does not match degree");
  }
  return de_casteljau(curve, 0.5 * (1.0 + t));
}

Point2 eval_curve_basis(const BezierCurve& curve, double t) {
  Point2 acc{0.0, 0.0};
  for (int j = 0; j <= curve.degree; ++j) {
    acc = acc + bernstein(curve.degree, j, t) * curve.control_points[j];
  }
  return acc;
}

BezierCurve derivative_curve(const BezierCurve& curve, int order) {
  if (order < 0) throw std::invalid_argument("derivative_curve: negative order");
  BezierCurve d = curve;
  for (int m = 0; m < order; ++m) {
    if (d.degree == 0) {
      d.control_points = {Point2{0.0, 0.0}};
      continue;
    }
    const double scale = 0.5 * d.degree;
    std::vector<Point2> next(d.degree);
    for (int j = 0; j < d.degree; ++j) {
      next[j] = scale * (d.control_points[j + 1] - d.control_points[j]);
    }
    d.degree -= 1;
    d.control_points = std::move(next);
  }
  return d;
}

std::vector<Point2> curve_derivatives(const BezierCurve& curve, double t, int max_order) {
  std::vector<Point2> out;
  out.reserve(max_order + 1);
  BezierCurve d = curve;
  for (int m = 0; m <= max_order; ++m) {
    // polynomials extend smoothly beyond [-1, 1]; no clamp here
    out.push_back(de_casteljau(d, 0.5 * (1.0 + t)));
    d = derivative_curve(d, 1);
  }
  return out;
}

std::vector<double> psi_derivatives(const BezierCurve& curve, double t, int max_order) {
  const std::vector<Point2> p = curve_derivatives(curve, t, max_order);
  std::vector<double> out(max_order + 1, 0.0);
  for (int m = 0; m <= max_order; ++m) {
    double s = 0.0;
    for (int i = 0; i <= m; ++i) {
      s += binomial(m, i) * dot(p[i], p[m - i]);
    }
    out[m] = s;
  }
  out[0] -= 1.0;
  return out;
}

GkScaffold::GkScaffold(int degree, int smoothness, ArcSpec arc)
    : degree_(degree), smoothness_(smoothness), arc_(arc) {
  if (!case_supported(degree, smoothness)) {
    throw std::invalid_argument("unsupported (degree, smoothness) pair (" +
                                std::to_string(degree) + ", " + std::to_string(smoothness) +
                                "); supported: (2,0),(3,0),(3,1),(4,1),(4,2)");
  }
}

bool case_supported(int degree, int smoothness) {
  return (degree == 2 && smoothness == 0) || (degree == 3 && smoothness == 0) ||
         (degree == 3 && smoothness == 1) || (degree == 4 && smoothness == 1) ||
         (degree == 4 && smoothness == 2);
}

BezierCurve instantiate(const GkScaffold& scaffold, const std::vector<double>& params) {
  const int n = scaffold.degree();
  const int k = scaffold.smoothness();
  if (params.size() != size_t(scaffold.free_param_count())) {
    throw std::invalid_argument("instantiate: expected " +
                                std::to_string(scaffold.free_param_count()) +
                                " parameters, got " + std::to_string(params.size()));
  }
  for (double v : params) {
    if (!std::isfinite(v)) throw std::invalid_argument("instantiate: non-finite parameter");
  }
  const double phi = scaffold.arc().half_angle();
  const double c = std::cos(phi);
  const double s = std::sin(phi);
  BezierCurve curve;
  curve.degree = n;
  if (n == 2 && k == 0) {
    const double xi = params[0];
    curve.control_points = {{c, -s}, {xi, 0.0}, {c, s}};
  } else if (n == 3 && k == 0) {
    const double xi = params[0], eta = params[1];
    curve.control_points = {{c, -s}, {xi, -eta}, {xi, eta}, {c, s}};
  } else if (n == 3 && k == 1) {
    const double d = params[0];
    curve.control_points = {{c, -s}, {c + d * s, -s + d * c}, {c + d * s, s - d * c}, {c, s}};
  } else if (n == 4 && k == 1) {
    const double d = params[0], xi = params[1];
    curve.control_points = {
        {c, -s}, {c + d * s, -s + d * c}, {xi, 0.0}, {c + d * s, s - d * c}, {c, s}};
  } else {  // (4, 2)
    const double xi = params[0];
    const double dd = 0.75 * (1.0 - xi * c);
    if (!(dd > 0.0)) {
      throw std::domain_error(
          "instantiate: quartic G2 curvature condition requires xi*cos(phi) < 1");
    }
    const double d = std::sqrt(dd);
    curve.control_points = {
        {c, -s}, {c + d * s, -s + d * c}, {xi, 0.0}, {c + d * s, s - d * c}, {c, s}};
  }
  return curve;
}

}  // namespace arcfit
