#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "arcfit/geometry.hpp"

using namespace arcfit;

TEST_CASE("ArcSpec accepts (0, pi/2] and rejects everything else") {
  CHECK(ArcSpec(kPi / 2).half_angle() == kPi / 2);
  CHECK(ArcSpec(1e-9).half_angle() == 1e-9);
  CHECK_THROWS_AS(ArcSpec(0.0), std::domain_error);
  CHECK_THROWS_AS(ArcSpec(-0.3), std::domain_error);
  CHECK_THROWS_AS(ArcSpec(kPi / 2 + 1e-12), std::domain_error);
  CHECK_THROWS_AS(ArcSpec(std::nan("")), std::domain_error);
}

TEST_CASE("binomial coefficients") {
  CHECK(binomial(0, 0) == 1.0);
  CHECK(binomial(4, 2) == 6.0);
  CHECK(binomial(8, 3) == 56.0);
  CHECK(binomial(15, 7) == 6435.0);
  CHECK(binomial(5, -1) == 0.0);
  CHECK(binomial(5, 6) == 0.0);
}

TEST_CASE("bernstein basis partitions unity and peaks at the right endpoint") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  for (int n = 1; n <= 6; ++n) {
    for (int trial = 0; trial < 50; ++trial) {
      const double t = dist(rng);
      double sum = 0.0;
      for (int j = 0; j <= n; ++j) sum += bernstein(n, j, t);
      CHECK(sum == doctest::Approx(1.0).epsilon(1e-14));
    }
    CHECK(bernstein(n, 0, -1.0) == 1.0);
    CHECK(bernstein(n, n, 1.0) == 1.0);
    for (int j = 1; j <= n; ++j) CHECK(bernstein(n, j, -1.0) == 0.0);
  }
  CHECK_THROWS_AS(bernstein(3, 4, 0.0), std::domain_error);
  CHECK_THROWS_AS(bernstein(3, -1, 0.0), std::domain_error);
  CHECK_THROWS_AS(bernstein(3, 1, 1.5), std::domain_error);
}

TEST_CASE("de Casteljau agrees with basis summation") {
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> coord(-2.0, 2.0);
  std::uniform_real_distribution<double> param(-1.0, 1.0);
  for (int n = 1; n <= 6; ++n) {
    BezierCurve curve;
    curve.degree = n;
    for (int j = 0; j <= n; ++j) curve.control_points.push_back({coord(rng), coord(rng)});
    for (int trial = 0; trial < 100; ++trial) {
      const double t = param(rng);
      const Point2 a = eval_curve(curve, t);
      const Point2 b = eval_curve_basis(curve, t);
      CHECK(std::abs(a.x - b.x) < 1e-13);
      CHECK(std::abs(a.y - b.y) < 1e-13);
    }
  }
}

TEST_CASE("eval_curve validates its inputs") {
  BezierCurve curve{1, {{0.0, 0.0}, {1.0, 1.0}}};
  CHECK_THROWS_AS(eval_curve(curve, 1.0 + 1e-9), std::domain_error);
  CHECK_THROWS_AS(eval_curve(curve, -2.0), std::domain_error);
  BezierCurve bad{2, {{0.0, 0.0}, {1.0, 1.0}}};
  CHECK_THROWS_AS(eval_curve(bad, 0.0), std::invalid_argument);
}

TEST_CASE("derivative_curve matches finite differences") {
  BezierCurve curve{3, {{1.0, 0.0}, {1.2, -0.4}, {0.7, 0.9}, {-0.3, 0.5}}};
  const BezierCurve d1 = derivative_curve(curve);
  const BezierCurve d2 = derivative_curve(curve, 2);
  CHECK(d1.degree == 2);
  CHECK(d2.degree == 1);
  const double h = 1e-6;
  for (double t : {-0.9, -0.4, 0.0, 0.3, 0.8}) {
    const Point2 fwd = eval_curve(curve, t + h);
    const Point2 bwd = eval_curve(curve, t - h);
    const Point2 fd = (1.0 / (2.0 * h)) * (fwd - bwd);
    const Point2 an = eval_curve(d1, t);
    CHECK(std::abs(fd.x - an.x) < 1e-8);
    CHECK(std::abs(fd.y - an.y) < 1e-8);
    const Point2 fd2 = (1.0 / (h * h)) * ((fwd - eval_curve(curve, t)) -
                                          (eval_curve(curve, t) - bwd));
    const Point2 an2 = eval_curve(d2, t);
    CHECK(std::abs(fd2.x - an2.x) < 1e-3);
    CHECK(std::abs(fd2.y - an2.y) < 1e-3);
  }
  // degree exhausts to the zero curve
  const BezierCurve d4 = derivative_curve(curve, 4);
  CHECK(d4.degree == 0);
  CHECK(eval_curve(d4, 0.0).x == 0.0);
  CHECK_THROWS_AS(derivative_curve(curve, -1), std::invalid_argument);
}

TEST_CASE("psi_derivatives matches finite differences of ||p||^2 - 1") {
  BezierCurve curve{3, {{1.0, -0.1}, {1.1, -0.05}, {1.1, 0.05}, {1.0, 0.1}}};
  const auto psi_at = [&](double t) {
    const Point2 p = eval_curve(curve, t);
    return dot(p, p) - 1.0;
  };
  const double h = 1e-5;
  for (double t : {-0.7, -0.2, 0.1, 0.6}) {
    const auto der = psi_derivatives(curve, t, 2);
    CHECK(std::abs(der[0] - psi_at(t)) < 1e-14);
    const double fd1 = (psi_at(t + h) - psi_at(t - h)) / (2.0 * h);
    CHECK(std::abs(der[1] - fd1) < 1e-8);
    const double fd2 = (psi_at(t + h) - 2.0 * psi_at(t) + psi_at(t - h)) / (h * h);
    CHECK(std::abs(der[2] - fd2) < 1e-4);
  }
}

TEST_CASE("scaffold instantiation enforces endpoint contact") {
  const ArcSpec arc(kPi / 4);

  SUBCASE("endpoints lie on the arc for every case") {
    const BezierCurve q20 = instantiate(GkScaffold(2, 0, arc), {1.3});
    const BezierCurve q30 = instantiate(GkScaffold(3, 0, arc), {1.1, 0.3});
    const BezierCurve q31 = instantiate(GkScaffold(3, 1, arc), {0.55});
    const BezierCurve q41 = instantiate(GkScaffold(4, 1, arc), {0.4, 1.1});
    const BezierCurve q42 = instantiate(GkScaffold(4, 2, arc), {1.1});
    for (const BezierCurve* q : {&q20, &q30, &q31, &q41, &q42}) {
      for (double t : {-1.0, 1.0}) {
        const Point2 p = eval_curve(*q, t);
        CHECK(std::abs(dot(p, p) - 1.0) < 1e-14);
      }
    }
  }

  SUBCASE("G1 scaffolds zero psi' at the endpoints for any parameter") {
    const BezierCurve q31 = instantiate(GkScaffold(3, 1, arc), {0.7});
    const BezierCurve q41 = instantiate(GkScaffold(4, 1, arc), {0.3, 1.2});
    for (const BezierCurve* q : {&q31, &q41}) {
      for (double t : {-1.0, 1.0}) {
        const auto der = psi_derivatives(*q, t, 1);
        CHECK(std::abs(der[0]) < 1e-14);
        CHECK(std::abs(der[1]) < 1e-13);
      }
    }
  }

  SUBCASE("G2 scaffold additionally zeros psi'' at the endpoints") {
    const BezierCurve q42 = instantiate(GkScaffold(4, 2, arc), {1.05});
    for (double t : {-1.0, 1.0}) {
      const auto der = psi_derivatives(q42, t, 2);
      CHECK(std::abs(der[0]) < 1e-14);
      CHECK(std::abs(der[1]) < 1e-13);
      CHECK(std::abs(der[2]) < 1e-12);
    }
  }

  SUBCASE("symmetry about the x-axis gives an even psi") {
    const BezierCurve q = instantiate(GkScaffold(4, 1, arc), {0.4, 1.11});
    for (double t : {0.1, 0.35, 0.62, 0.97}) {
      const auto plus = psi_derivatives(q, t, 0);
      const auto minus = psi_derivatives(q, -t, 0);
      CHECK(std::abs(plus[0] - minus[0]) < 1e-15);
    }
  }
}

TEST_CASE("scaffold rejects bad cases and parameters") {
  const ArcSpec arc(kPi / 4);
  CHECK_THROWS_AS(GkScaffold(5, 0, arc), std::invalid_argument);
  CHECK_THROWS_AS(GkScaffold(4, 3, arc), std::invalid_argument);
  CHECK_THROWS_AS(GkScaffold(2, 1, arc), std::invalid_argument);
  CHECK(case_supported(3, 1));
  CHECK_FALSE(case_supported(3, 2));

  const GkScaffold s(3, 0, arc);
  CHECK(s.free_param_count() == 2);
  CHECK_THROWS_AS(instantiate(s, {1.0}), std::invalid_argument);
  CHECK_THROWS_AS(instantiate(s, {1.0, 0.2, 0.3}), std::invalid_argument);
  CHECK_THROWS_AS(instantiate(s, {1.0, std::nan("")}), std::invalid_argument);

  // curvature condition: xi cos(phi) must stay below 1
  const GkScaffold g2(4, 2, arc);
  CHECK_THROWS_AS(instantiate(g2, {1.0 / std::cos(kPi / 4) + 0.01}), std::domain_error);
}
