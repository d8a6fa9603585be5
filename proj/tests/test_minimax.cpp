#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "arcfit/geometry.hpp"
#include "arcfit/minimax.hpp"

using namespace arcfit;

namespace {

double dense_norm(const ConstrainedMinimaxPoly& poly) {
  double best = 0.0;
  for (int i = 0; i <= 20000; ++i) {
    const double t = -1.0 + 2.0 * i / 20000.0;
    best = std::max(best, std::fabs(eval_minimax(poly, t)));
  }
  return best;
}

}  // namespace

TEST_CASE("chebyshev family reproduces the exact quadratic and cubic zeros") {
  const ConstrainedMinimaxPoly p2 = chebyshev_k0(2);
  REQUIRE(p2.positive_zeros.size() == 1);
  CHECK(std::abs(p2.positive_zeros[0] - (std::sqrt(2.0) - 1.0)) < 1e-13);
  CHECK(std::abs(p2.norm - (3.0 - 2.0 * std::sqrt(2.0))) < 1e-13);
  CHECK(p2.family == "chebyshev_k0");

  const ConstrainedMinimaxPoly p3 = chebyshev_k0(3);
  REQUIRE(p3.positive_zeros.size() == 2);
  CHECK(std::abs(p3.positive_zeros[0] - (2.0 - std::sqrt(3.0))) < 1e-13);
  CHECK(std::abs(p3.positive_zeros[1] - (std::sqrt(3.0) - 1.0)) < 1e-13);
  CHECK(std::abs(p3.norm - 0.038475772933681207) < 1e-15);

  // degenerate n = 1: p* = 1 - t^2 with no interior zero
  const ConstrainedMinimaxPoly p1 = chebyshev_k0(1);
  CHECK(p1.positive_zeros.empty());
  CHECK(p1.norm == doctest::Approx(1.0));

  CHECK_THROWS_AS(chebyshev_k0(0), std::invalid_argument);
}

TEST_CASE("chebyshev norm matches the closed-form level and the dense maximum") {
  for (int n = 2; n <= 6; ++n) {
    const ConstrainedMinimaxPoly p = chebyshev_k0(n);
    const double scale = std::cos(kPi / (4.0 * n));
    const double level = std::pow(2.0, 1.0 - 2.0 * n) / std::pow(scale, 2.0 * n);
    CHECK(std::abs(p.norm - level) < 1e-15 * level);
    CHECK(std::abs(dense_norm(p) - p.norm) < 1e-11 * p.norm);
    CHECK(int(p.positive_zeros.size()) == n - 1);
    for (std::size_t i = 1; i < p.positive_zeros.size(); ++i) {
      CHECK(p.positive_zeros[i] > p.positive_zeros[i - 1]);
    }
  }
}

TEST_CASE("penultimate family solves a^n + n a - (n-1) = 0") {
  const ConstrainedMinimaxPoly p3 = penultimate_case(3);
  const double a3 = std::cbrt(std::sqrt(2.0) + 1.0) - std::cbrt(std::sqrt(2.0) - 1.0);
  const double t1 = std::sqrt(1.0 - 1.5 * a3);
  REQUIRE(p3.positive_zeros.size() == 1);
  CHECK(std::abs(p3.positive_zeros[0] - t1) < 1e-13);
  CHECK(std::abs(p3.norm - t1 * t1) < 1e-14);
  CHECK(p3.family == "penultimate");

  const ConstrainedMinimaxPoly p4 = penultimate_case(4);
  REQUIRE(p4.positive_zeros.size() == 1);
  CHECK(std::abs(p4.positive_zeros[0] - 0.27687580230892425) < 1e-12);
  CHECK(std::abs(p4.norm - 0.076660209904210002) < 1e-13);

  // k = 0 overlap: n = 2 penultimate coincides with the Chebyshev case
  const ConstrainedMinimaxPoly p2 = penultimate_case(2);
  CHECK(std::abs(p2.positive_zeros[0] - (std::sqrt(2.0) - 1.0)) < 1e-12);
  CHECK(std::abs(p2.norm - (3.0 - 2.0 * std::sqrt(2.0))) < 1e-12);

  CHECK_THROWS_AS(penultimate_case(1), std::invalid_argument);
}

TEST_CASE("antepenultimate family matches its radical solution for n = 4") {
  const ConstrainedMinimaxPoly p = antepenultimate_case(4);
  REQUIRE(p.positive_zeros.size() == 2);

  const double s3 = std::sqrt(3.0);
  const double lambda = (s3 - std::sqrt(2.0) * std::pow(3.0, 0.25) + 1.0) / 2.0;
  const double a = std::sqrt(1.0 + s3 + std::sqrt(24.0 + 14.0 * s3)) -
                   (1.0 + s3 + std::sqrt(2.0) * std::pow(3.0, 0.25)) / 2.0;
  const double b = lambda * a;
  const double B = (4.0 / 3.0) * (a + b);
  const double C = 2.0 * a * b;
  const double disc = std::sqrt(B * B - 4.0 * C);
  const double z1 = std::sqrt(1.0 - 0.5 * (B + disc));
  const double z2 = std::sqrt(1.0 - 0.5 * (B - disc));

  CHECK(std::abs(p.positive_zeros[0] - z1) < 1e-12);
  CHECK(std::abs(p.positive_zeros[1] - z2) < 1e-12);
  CHECK(std::abs(p.positive_zeros[0] - 0.21941600085989102) < 1e-12);
  CHECK(std::abs(p.positive_zeros[1] - 0.62712245708910080) < 1e-12);
  CHECK(std::abs(p.norm - 0.018933953076386760) < 1e-13);
  CHECK(p.family == "antepenultimate");
}

TEST_CASE("antepenultimate n = 3 coincides with the Chebyshev cubic") {
  const ConstrainedMinimaxPoly a3 = antepenultimate_case(3);
  const ConstrainedMinimaxPoly c3 = chebyshev_k0(3);
  REQUIRE(a3.positive_zeros.size() == 2);
  CHECK(std::abs(a3.positive_zeros[0] - c3.positive_zeros[0]) < 1e-12);
  CHECK(std::abs(a3.positive_zeros[1] - c3.positive_zeros[1]) < 1e-12);
  CHECK(std::abs(a3.norm - c3.norm) < 1e-13);
  CHECK_THROWS_AS(antepenultimate_case(2), std::invalid_argument);
}

TEST_CASE("antepenultimate n = 6 equioscillates") {
  const ConstrainedMinimaxPoly p = antepenultimate_case(6);
  REQUIRE(p.positive_zeros.size() == 2);
  CHECK(p.positive_zeros[0] > 0.0);
  CHECK(p.positive_zeros[1] < 1.0);
  const auto alternation = alternation_points(p);
  CHECK(alternation.size() == 5);  // 2n - 2k - 1 interior extrema
  for (double t : alternation) {
    CHECK(std::abs(std::fabs(eval_minimax(p, t)) - p.norm) < 1e-12);
  }
  CHECK(std::abs(dense_norm(p) - p.norm) < 1e-12);
}

TEST_CASE("remez exchange reproduces every closed form") {
  const auto close = [](const ConstrainedMinimaxPoly& a, const ConstrainedMinimaxPoly& b,
                        double ztol, double ntol) {
    REQUIRE(a.positive_zeros.size() == b.positive_zeros.size());
    for (std::size_t i = 0; i < a.positive_zeros.size(); ++i) {
      CHECK(std::abs(a.positive_zeros[i] - b.positive_zeros[i]) < ztol);
    }
    CHECK(std::abs(a.norm - b.norm) < ntol * b.norm);
  };
  close(remez_general(3, 0, 1e-13), chebyshev_k0(3), 1e-9, 1e-12);
  close(remez_general(4, 2, 1e-13), penultimate_case(4), 1e-9, 1e-12);
  close(remez_general(4, 1, 1e-13), antepenultimate_case(4), 1e-9, 1e-12);
  close(remez_general(5, 3, 1e-13), penultimate_case(5), 1e-9, 1e-12);

  CHECK_THROWS_AS(remez_general(3, 3, 1e-13), std::invalid_argument);
  CHECK_THROWS_AS(remez_general(3, -1, 1e-13), std::invalid_argument);
  CHECK_THROWS_AS(remez_general(3, 0, 0.0), std::invalid_argument);
}

TEST_CASE("best_poly dispatches to the right family") {
  CHECK(best_poly(4, 0).family == "chebyshev_k0");
  CHECK(best_poly(5, 3).family == "penultimate");
  CHECK(best_poly(5, 2).family == "antepenultimate");
  CHECK(best_poly(6, 2).family == "remez");

  // k = n - 1 leaves no free zeros: p* = (1 - t^2)^n with norm 1 at t = 0
  const ConstrainedMinimaxPoly degen = best_poly(5, 4);
  CHECK(degen.positive_zeros.empty());
  CHECK(degen.norm == doctest::Approx(1.0));
}

TEST_CASE("a remez case without closed form still equioscillates") {
  const ConstrainedMinimaxPoly p = remez_general(5, 2, 1e-10);
  REQUIRE(p.positive_zeros.size() == 2);
  const auto alternation = alternation_points(p);
  CHECK(int(alternation.size()) == 2 * p.n - 2 * p.k - 1);
  for (double t : alternation) {
    CHECK(std::fabs(std::fabs(eval_minimax(p, t)) / p.norm - 1.0) < 1e-9);
  }
}

TEST_CASE("eval_minimax at zero equals q*(0)") {
  for (const ConstrainedMinimaxPoly& p :
       {chebyshev_k0(3), penultimate_case(4), antepenultimate_case(4)}) {
    CHECK(std::abs(eval_minimax(p, 0.0) - q_star_at_zero(p)) < 1e-16);
    for (double z : p.positive_zeros) {
      CHECK(std::abs(eval_minimax(p, z)) < 1e-16);
      CHECK(std::abs(eval_minimax(p, -z)) < 1e-16);
    }
    CHECK(eval_minimax(p, 1.0) == 0.0);
    CHECK(eval_minimax(p, -1.0) == 0.0);
  }
}

TEST_CASE("alternation points are symmetric interior extrema") {
  const ConstrainedMinimaxPoly p = chebyshev_k0(2);
  const auto alternation = alternation_points(p);
  REQUIRE(alternation.size() == 3);
  CHECK(std::abs(alternation[1]) < 1e-7);              // t = 0 is central
  CHECK(std::abs(alternation[0] + alternation[2]) < 1e-7);  // mirrored pair
}
