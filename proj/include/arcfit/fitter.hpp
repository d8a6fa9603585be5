#pragma once

#include <array>
#include <vector>

#include "arcfit/geometry.hpp"
#include "arcfit/minimax.hpp"

namespace arcfit {

struct FitResult {
  BezierCurve curve;
  std::vector<double> params;  // scaffold order: (xi), (xi,eta), (d), (d,xi), (xi)
  double c_constant = 0.0;     // psi = c_constant * p
  double max_abs_psi = 0.0;
  double hausdorff = 0.0;
  int branch_count = 0;  // admissible solutions found by the solver
  ConstrainedMinimaxPoly minimax_poly;
};

// The two conics e_1 = e_2 = 0 whose intersection solves the cubic G^0 case.
struct EllipsePair {
  std::array<Point2, 2> centers;
  std::array<std::array<double, 2>, 2> semiaxes;  // (a_i, b_i)
};

// C = psi(0) / q*(0); requires q*(0) != 0 (all zeros strictly positive).
double compute_C(const BezierCurve& curve, const ConstrainedMinimaxPoly& poly);

FitResult fit_quadratic_g0(const ArcSpec& arc);
FitResult fit_cubic_g0(const ArcSpec& arc);
FitResult fit_cubic_g1(const ArcSpec& arc);
FitResult fit_quartic_g1(const ArcSpec& arc);
FitResult fit_quartic_g2(const ArcSpec& arc);

FitResult fit_case(int degree, int smoothness, const ArcSpec& arc);

// Interpolation with prescribed zeros of the error polynomial instead of the
// minimax ones. Entries lie in [0, 1], non-decreasing, n-k-1 of them:
//   z in (0,1) once      -> psi(z) = 0
//   z in (0,1) twice     -> psi(z) = psi'(z) = 0
//   0 once / twice       -> psi(0) = 0 / psi(0) = psi''(0) = 0
//   1 once / twice       -> psi''(-1) = 0 / psi''(-1) = psi'''(-1) = 0
// (Evenness makes the odd derivatives at 0 vanish; the scaffold already forces
// contact of order k+1 at the endpoints, so a zero at 1 raises it further.)
FitResult fit_prescribed_zeros(int degree, int smoothness,
                               const std::vector<double>& positive_zeros,
                               const ArcSpec& arc);

// Closed forms for the cubic G^0 conic pair and its boundary crossings
// (xi_1, xi_2, eta_1, eta_2); the crossings bracket the unique solution.
EllipsePair cubic_g0_ellipses(const ArcSpec& arc);
std::array<double, 4> cubic_g0_boundary_crossings(const ArcSpec& arc);

// Boundary solutions (d_1, d_2, xi_1, xi_2) of the quartic G^1 system on the
// edges xi = 1 and d = 0; they span the Newton seed box.
std::array<double, 4> quartic_g1_boundary_values(const ArcSpec& arc);

}  // namespace arcfit
