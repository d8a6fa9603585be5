#pragma once

#include <stdexcept>
#include <vector>

namespace arcfit {

inline constexpr double kPi = 3.14159265358979323846;

struct Point2 {
  double x = 0.0;
  double y = 0.0;
};

inline Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
inline Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
inline Point2 operator*(double s, Point2 a) { return {s * a.x, s * a.y}; }
inline double dot(Point2 a, Point2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point2 a, Point2 b) { return a.x * b.y - a.y * b.x; }

// Unit circular arc spanning polar angles [-phi, phi], centered at the origin.
class ArcSpec {
public:
  explicit ArcSpec(double half_angle);
  double half_angle() const { return half_angle_; }

private:
  double half_angle_;
};

// Polynomial curve in Bernstein-Bezier form over the parameter domain [-1, 1].
struct BezierCurve {
  int degree = 0;
  std::vector<Point2> control_points;  // degree + 1 entries
};

double binomial(int n, int j);

// B_j^n(t) = C(n,j) ((1+t)/2)^j ((1-t)/2)^(n-j), t in [-1, 1].
double bernstein(int n, int j, double t);

// de Casteljau evaluation; throws if t is outside [-1, 1].
Point2 eval_curve(const BezierCurve& curve, double t);

// Basis-summation evaluation, kept as an independent reference for tests.
Point2 eval_curve_basis(const BezierCurve& curve, double t);

// m-th derivative curve: control points (n/2)(b_{j+1} - b_j), applied m times.
// The factor n/2 accounts for the domain [-1, 1] instead of [0, 1].
BezierCurve derivative_curve(const BezierCurve& curve, int order = 1);

// Derivatives p^(m)(t) for m = 0..max_order, each evaluated without clamping
// (polynomials extend smoothly beyond the domain).
std::vector<Point2> curve_derivatives(const BezierCurve& curve, double t, int max_order);

// psi(t) = ||p(t)||^2 - 1 and its derivatives up to max_order at t, computed
// exactly via hodographs and the Leibniz rule.
std::vector<double> psi_derivatives(const BezierCurve& curve, double t, int max_order);

// Symmetric control-point template for a degree-n G^k approximant of an arc.
// Free parameters: (2,0): (xi); (3,0): (xi, eta); (3,1): (d); (4,1): (d, xi);
// (4,2): (xi) with the tangent length d fixed by the unit-curvature condition
// at the endpoints, d = sqrt(3(1 - xi cos(phi)) / 4).
class GkScaffold {
public:
  GkScaffold(int degree, int smoothness, ArcSpec arc);

  int degree() const { return degree_; }
  int smoothness() const { return smoothness_; }
  const ArcSpec& arc() const { return arc_; }
  int free_param_count() const { return degree_ - smoothness_ - 1; }

private:
  int degree_;
  int smoothness_;
  ArcSpec arc_;
};

bool case_supported(int degree, int smoothness);

BezierCurve instantiate(const GkScaffold& scaffold, const std::vector<double>& params);

}  // namespace arcfit
