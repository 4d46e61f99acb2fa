#include <cmath>

#include "doctest.h"
#include "helmsens/velocity.hpp"

using namespace helmsens;

namespace {

// jet vs central differences of eval
void check_jet(const VelocityField& v, Vec2 x, double tol = 2e-6) {
  const double h = 1e-5;
  const VelocityJet jet = v.jet(x);
  const Vec2 v0 = v.eval(x);
  CHECK(jet.v.x == doctest::Approx(v0.x).epsilon(1e-13));
  CHECK(jet.v.y == doctest::Approx(v0.y).epsilon(1e-13));
  const Vec2 dx1 = v.eval({x.x + h, x.y}), dx0 = v.eval({x.x - h, x.y});
  const Vec2 dy1 = v.eval({x.x, x.y + h}), dy0 = v.eval({x.x, x.y - h});
  CHECK(jet.grad(0, 0) == doctest::Approx((dx1.x - dx0.x) / (2 * h))
                                .epsilon(tol));
  CHECK(jet.grad(0, 1) == doctest::Approx((dy1.x - dy0.x) / (2 * h))
                                .epsilon(tol));
  CHECK(jet.grad(1, 0) == doctest::Approx((dx1.y - dx0.y) / (2 * h))
                                .epsilon(tol));
  CHECK(jet.grad(1, 1) == doctest::Approx((dy1.y - dy0.y) / (2 * h))
                                .epsilon(tol));
  CHECK(jet.div ==
        doctest::Approx(jet.grad(0, 0) + jet.grad(1, 1)).epsilon(1e-12));
  // A'(0) = div I - M - M^T
  CHECK(jet.aprime(0, 1) ==
        doctest::Approx(-jet.grad(0, 1) - jet.grad(1, 0)).epsilon(1e-12));
  // Laplacian via 5-point stencil
  const Vec2 lap{
      (dx1.x + dx0.x + dy1.x + dy0.x - 4 * v0.x) / (h * h),
      (dx1.y + dx0.y + dy1.y + dy0.y - 4 * v0.y) / (h * h)};
  CHECK(jet.lap.x == doctest::Approx(lap.x).epsilon(5e-4));
  CHECK(jet.lap.y == doctest::Approx(lap.y).epsilon(5e-4));
}

VelocityField test_blend() {
  return VelocityField::radial_blend(
      {Complex(0.15, 0.0), Complex(0.5, 0.0), Complex(0.075, 0.0)},
      {Complex(0.0, 0.0), Complex(0.0, -0.5), Complex(0.0, -0.075)}, 0.6, 1.0,
      1.8, 0.5);
}

}  // namespace

TEST_CASE("velocity jets match finite differences") {
  check_jet(VelocityField::constant({0.4, -0.25}), {1.1, 0.3});
  check_jet(VelocityField::dilation(), {0.7, -1.2});
  check_jet(VelocityField::rotation(), {0.7, -1.2});
  const VelocityField blend = test_blend();
  for (const Vec2& x :
       {Vec2{0.9, 0.35}, Vec2{-0.7, 0.3}, Vec2{1.1, -0.9}, Vec2{0.5, 0.45}})
    check_jet(blend, x, 2e-5);
}

TEST_CASE("radial blend restricts to the boundary profile on the plateau") {
  const VelocityField blend = test_blend();
  // on |x| = 1: v = (1 + 0.3 cos phi) e_r with the chosen coefficients
  for (double phi : {0.0, 0.9, 2.2, 4.0}) {
    const Vec2 x{std::cos(phi), std::sin(phi)};
    const Vec2 val = blend.eval(x);
    const double g = 1.0 + 0.3 * std::cos(phi);
    CHECK(val.x == doctest::Approx(g * std::cos(phi)).epsilon(1e-12));
    CHECK(val.y == doctest::Approx(g * std::sin(phi)).epsilon(1e-12));
  }
  // psi is affine near r = 1 with slope 1/2: radial derivative of |v| along
  // e_r at phi = 0 equals psi'(1) * g(0) + 0 (angular profile fixed)
  const double h = 1e-6;
  const double up = blend.eval({1.0 + h, 0.0}).x;
  const double dn = blend.eval({1.0 - h, 0.0}).x;
  CHECK((up - dn) / (2 * h) == doctest::Approx(0.5 * 1.3).epsilon(1e-9));
  CHECK(blend.eval({2.5, 0.0}).x == 0.0);
  CHECK(blend.eval({0.3, 0.1}).y == 0.0);
}

TEST_CASE("transform_curve oracles") {
  const StarCurve disc = StarCurve::disc(1.0, 64);
  SUBCASE("dilation maps the disc to a larger disc") {
    const StarCurve moved = transform_curve(disc, VelocityField::dilation(),
                                            0.07);
    for (std::size_t j = 0; j < moved.size(); ++j)
      CHECK(moved.rho().samples()[j].real() ==
            doctest::Approx(1.07).epsilon(1e-12));
  }
  SUBCASE("translation keeps every point at distance 1 from the new center") {
    const Vec2 c{0.4, -0.25};
    const double t = 0.05;
    const StarCurve moved =
        transform_curve(disc, VelocityField::constant(c), t);
    for (std::size_t j = 0; j < moved.size(); ++j) {
      const Vec2 p = moved.position(j);
      const double d = std::hypot(p.x - t * c.x, p.y - t * c.y);
      CHECK(d == doctest::Approx(1.0).epsilon(1e-11));
    }
  }
  SUBCASE("rotation maps the disc to radius sqrt(1 + t^2)") {
    // x + t v is the Euler step of the rotation flow, not the rotation
    // itself: it scales the circle by sqrt(1 + t^2)
    const double t = 0.03;
    const StarCurve moved =
        transform_curve(disc, VelocityField::rotation(), t);
    for (std::size_t j = 0; j < moved.size(); ++j)
      CHECK(moved.rho().samples()[j].real() ==
            doctest::Approx(std::sqrt(1.0 + t * t)).epsilon(1e-12));
  }
  SUBCASE("flower stays a valid refit under translation") {
    const StarCurve flower = StarCurve::make(
        {Complex(1.0, 0.0), Complex(0.0, 0.0), Complex(0.1, 0.0)}, 128);
    const double t = 0.03;
    const StarCurve moved =
        transform_curve(flower, VelocityField::constant({0.4, -0.25}), t);
    // every moved node must lie on the original curve shifted by t c
    for (std::size_t j = 0; j < moved.size(); j += 5) {
      const Vec2 p{moved.position(j).x - t * 0.4,
                   moved.position(j).y + t * 0.25};
      const double phi = std::atan2(p.y, p.x);
      CHECK(std::hypot(p.x, p.y) ==
            doctest::Approx(flower.rho_at(phi)).epsilon(1e-9));
    }
  }
  SUBCASE("an off-center map far enough breaks starshapedness") {
    CHECK_THROWS_AS(
        transform_curve(disc, VelocityField::constant({1.0, 0.0}), 1.2),
        NotStarshaped);
  }
}
