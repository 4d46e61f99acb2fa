#include <cmath>

#include "doctest.h"
#include "helmsens/curve.hpp"

using namespace helmsens;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("disc geometry is exact") {
  const double a = 1.7;
  const StarCurve c = StarCurve::disc(a, 64);
  CHECK(c.length() == doctest::Approx(2.0 * kPi * a).epsilon(1e-13));
  for (std::size_t j = 0; j < c.size(); ++j) {
    const double phi = c.node(j);
    const Vec2 n = c.normal(j);
    CHECK(n.x == doctest::Approx(std::cos(phi)).epsilon(1e-13));
    CHECK(n.y == doctest::Approx(std::sin(phi)).epsilon(1e-13));
    CHECK(c.curvature(j) == doctest::Approx(1.0 / a).epsilon(1e-12));
    CHECK(c.speed(j) == doctest::Approx(a).epsilon(1e-13));
  }
}

TEST_CASE("flower geometry matches finite differences") {
  const std::vector<Complex> coeffs = {Complex(1.0, 0.0), Complex(0.0, 0.0),
                                       Complex(0.1, 0.0)};
  const StarCurve c = StarCurve::make(coeffs, 128);
  const double h = 1e-6;
  for (std::size_t j = 0; j < c.size(); j += 7) {
    const double phi = c.node(j);
    CHECK(c.rho_at(phi) == doctest::Approx(1.0 + 0.2 * std::cos(2.0 * phi))
                               .epsilon(1e-12));
    const Vec2 fd{(c.position_at(phi + h).x - c.position_at(phi - h).x) /
                      (2.0 * h),
                  (c.position_at(phi + h).y - c.position_at(phi - h).y) /
                      (2.0 * h)};
    const Vec2 d = c.derivative_at(phi);
    CHECK(d.x == doctest::Approx(fd.x).epsilon(1e-7));
    CHECK(d.y == doctest::Approx(fd.y).epsilon(1e-7));
    const double speed = std::sqrt(d.x * d.x + d.y * d.y);
    CHECK(c.speed(j) == doctest::Approx(speed).epsilon(1e-12));
    // unit tangent along x', outward normal = tangent rotated by -pi/2
    CHECK(c.tangent(j).x == doctest::Approx(d.x / speed).epsilon(1e-12));
    CHECK(c.normal(j).x == doctest::Approx(d.y / speed).epsilon(1e-12));
    CHECK(c.normal(j).y == doctest::Approx(-d.x / speed).epsilon(1e-12));
  }
}

TEST_CASE("arclength calculus on the disc") {
  const double a = 2.0;
  const StarCurve c = StarCurve::disc(a, 64);
  BoundaryField u(c.size());
  for (std::size_t j = 0; j < c.size(); ++j)
    u[j] = std::cos(3.0 * c.node(j));
  const BoundaryField du = c.arclength_derivative(u);
  const BoundaryField lap = c.surface_laplacian(u);
  for (std::size_t j = 0; j < c.size(); ++j) {
    const double phi = c.node(j);
    CHECK(std::abs(du[j] - (-3.0 / a) * std::sin(3.0 * phi)) < 1e-12);
    CHECK(std::abs(lap[j] - (-9.0 / (a * a)) * std::cos(3.0 * phi)) < 1e-11);
  }
  // H^s surrogate of a single mode: sqrt((1+9)^s * L/2pi) * amplitude scale
  const double ns = c.sobolev_norm(u, 0.5);
  const double want = std::sqrt((0.25 + 0.25) * std::pow(10.0, 0.5) * a);
  CHECK(ns == doctest::Approx(want).epsilon(1e-12));
}

TEST_CASE("tangential gradient and divergence are adjoint-consistent") {
  const StarCurve c =
      StarCurve::make({Complex(1.0, 0.0), Complex(0.05, 0.02)}, 128);
  BoundaryField u(c.size()), w(c.size());
  for (std::size_t j = 0; j < c.size(); ++j) {
    u[j] = std::sin(2.0 * c.node(j));
    w[j] = std::cos(c.node(j));
  }
  const TangentField gu = tangential_gradient(u, c);
  // div_Gamma(grad_Gamma u) = Lap_Gamma u
  const BoundaryField div = tangential_divergence(gu, c);
  const BoundaryField lap = c.surface_laplacian(u);
  for (std::size_t j = 0; j < c.size(); ++j)
    CHECK(std::abs(div[j] - lap[j]) < 1e-9);
}

TEST_CASE("invalid curves are rejected") {
  CHECK_THROWS_AS(StarCurve::make({Complex(0.1, 0.0), Complex(0.3, 0.0)}, 64),
                  NonpositiveRadius);
  CHECK_THROWS_AS(StarCurve::disc(1.0, 48), UnderResolved);
}
