#include <cmath>

#include "doctest.h"
#include "helmsens/mie.hpp"
#include "helmsens/special.hpp"

using namespace helmsens;
using reg::ProblemKind;

namespace {

WaveParameters params() {
  WaveParameters p;
  p.kappa = 2.0;
  p.eta = 1.0;
  p.kappa1 = 3.0;
  p.mu0 = 1.0;
  p.mu1 = 1.5;
  return p;
}

// Radiating point source anchored inside the disc: exact solution of every
// exterior radiating problem with its own boundary data.
Complex point_source(const WaveParameters& p, Vec2 z, Vec2 x) {
  return hankel1(0, p.kappa * std::hypot(x.x - z.x, x.y - z.y));
}

CVec2 point_source_grad(const WaveParameters& p, Vec2 z, Vec2 x) {
  const double r = std::hypot(x.x - z.x, x.y - z.y);
  const Complex dr = p.kappa * hankel1_prime(0, p.kappa * r);
  return {dr * (x.x - z.x) / r, dr * (x.y - z.y) / r};
}

}  // namespace

TEST_CASE("plane-wave solve satisfies the boundary condition") {
  const WaveParameters p = params();
  for (int b = 0; b <= 2; ++b) {
    const auto beta = static_cast<ProblemKind>(b);
    const SeriesSolution sol = mie_solve(beta, p, PlaneWave{0.3}, 1.0);
    const TraceBundle tb = sol.traces(128);
    double worst = 0.0;
    for (std::size_t j = 0; j < 128; ++j) {
      Complex r;
      if (b == 0)
        r = tb.xi.lambda[j];
      else if (b == 1)
        r = tb.xi.sigma[j];
      else
        r = tb.xi.sigma[j] + Complex(0.0, p.eta) * tb.xi.lambda[j];
      worst = std::max(worst, std::abs(r));
    }
    CHECK(worst < 1e-12);
    CHECK(sol.max_mode_condition < 1e12);
  }
}

TEST_CASE("transmission jump conditions hold per node") {
  const WaveParameters p = params();
  const SeriesSolution sol = mie_solve(ProblemKind::Transmission, p,
                                       PlaneWave{0.3}, 1.0);
  const TraceBundle tb = sol.traces(128);
  REQUIRE(tb.has_interior);
  for (std::size_t j = 0; j < 128; ++j) {
    CHECK(std::abs(tb.xi.lambda[j] - tb.xi.lambda_in[j]) < 1e-12);
    CHECK(std::abs(tb.xi.sigma[j] / p.mu0 - tb.xi.sigma_in[j] / p.mu1) <
          1e-12);
  }
}

TEST_CASE("radiating solve reproduces an interior point source") {
  const WaveParameters p = params();
  const Vec2 z{0.25, -0.1};
  const std::size_t N = 128;
  for (int b = 0; b <= 2; ++b) {
    const auto beta = static_cast<ProblemKind>(b);
    BoundaryField g(N);
    for (std::size_t j = 0; j < N; ++j) {
      const double phi = 2.0 * 3.14159265358979323846 * j / N;
      const Vec2 x{std::cos(phi), std::sin(phi)};
      const Complex val = point_source(p, z, x);
      const Complex dn = dot(point_source_grad(p, z, x), x);
      if (b == 0)
        g[j] = val;
      else if (b == 1)
        g[j] = dn;
      else
        g[j] = dn + Complex(0.0, p.eta) * val;
    }
    const SeriesSolution sol = mie_radiating(beta, p, g, 1.0);
    for (const Vec2& x : {Vec2{1.9, 0.4}, Vec2{-1.2, 1.5}, Vec2{0.0, -2.3}}) {
      const FieldEval e = sol.eval(x, FieldPart::Scattered);
      CHECK(std::abs(e.u - point_source(p, z, x)) < 1e-10);
      const CVec2 gref = point_source_grad(p, z, x);
      CHECK(std::abs(e.grad.x - gref.x) < 1e-9);
      CHECK(std::abs(e.grad.y - gref.y) < 1e-9);
    }
  }
}

TEST_CASE("eval derivatives are internally consistent") {
  const WaveParameters p = params();
  const SeriesSolution sol = mie_solve(ProblemKind::Neumann, p, PlaneWave{0.3},
                                       1.0);
  const Vec2 x{1.4, 0.6};
  const double h = 1e-5;
  const FieldEval e = sol.eval(x, FieldPart::Total);
  const Complex fx = (sol.eval({x.x + h, x.y}, FieldPart::Total).u -
                      sol.eval({x.x - h, x.y}, FieldPart::Total).u) /
                     (2.0 * h);
  const Complex fy = (sol.eval({x.x, x.y + h}, FieldPart::Total).u -
                      sol.eval({x.x, x.y - h}, FieldPart::Total).u) /
                     (2.0 * h);
  CHECK(std::abs(e.grad.x - fx) < 1e-8);
  CHECK(std::abs(e.grad.y - fy) < 1e-8);
  const Complex gxx = (sol.eval({x.x + h, x.y}, FieldPart::Total).grad.x -
                       sol.eval({x.x - h, x.y}, FieldPart::Total).grad.x) /
                      (2.0 * h);
  CHECK(std::abs(e.hess(0, 0) - gxx) < 1e-7);
  // Hessian trace satisfies Helmholtz
  CHECK(std::abs(e.hess(0, 0) + e.hess(1, 1) + p.kappa * p.kappa * e.u) <
        1e-11);
}

TEST_CASE("mode truncation is certified") {
  const SeriesSolution sol = mie_solve(ProblemKind::Dirichlet, params(),
                                       PlaneWave{0.0}, 1.0);
  double amax = 0.0;
  for (const Complex& c : sol.sc) amax = std::max(amax, std::abs(c));
  CHECK(std::abs(sol.coeff(sol.sc, sol.M)) <= 1e-14 * amax);
  CHECK(std::abs(sol.coeff(sol.sc, -sol.M)) <= 1e-14 * amax);
}
