#include <cmath>

#include "doctest.h"
#include "helmsens/bie.hpp"
#include "helmsens/special.hpp"

using namespace helmsens;
using reg::ProblemKind;

namespace {

WaveParameters params() {
  WaveParameters p;
  p.kappa = 2.0;
  p.eta = 1.0;
  return p;
}

StarCurve flower(std::size_t n) {
  return StarCurve::make(
      {Complex(1.0, 0.0), Complex(0.0, 0.0), Complex(0.1, 0.0)}, n);
}

Complex point_source(double kappa, Vec2 z, Vec2 x) {
  return hankel1(0, kappa * std::hypot(x.x - z.x, x.y - z.y));
}

CVec2 point_source_grad(double kappa, Vec2 z, Vec2 x) {
  const double r = std::hypot(x.x - z.x, x.y - z.y);
  const Complex dr = kappa * hankel1_prime(0, kappa * r);
  return {dr * (x.x - z.x) / r, dr * (x.y - z.y) / r};
}

}  // namespace

TEST_CASE("radiating solve reproduces a point source on the flower") {
  const WaveParameters p = params();
  const StarCurve c = flower(128);
  const Vec2 z{0.2, 0.15};
  for (int b = 0; b <= 2; ++b) {
    const auto beta = static_cast<ProblemKind>(b);
    BoundaryField g(c.size());
    for (std::size_t j = 0; j < c.size(); ++j) {
      const Vec2 x = c.position(j);
      const Complex val = point_source(p.kappa, z, x);
      const Complex dn = dot(point_source_grad(p.kappa, z, x), c.normal(j));
      g[j] = b == 0 ? val
                    : (b == 1 ? dn : dn + Complex(0.0, p.eta) * val);
    }
    const BIESolution sol = bie_radiating(beta, c, p, g);
    for (const Vec2& x : {Vec2{2.1, 0.3}, Vec2{-1.4, 1.6}, Vec2{0.2, -2.4}}) {
      const FieldEval e = sol.eval(x, FieldPart::Scattered);
      CHECK(std::abs(e.u - point_source(p.kappa, z, x)) < 1e-9);
      const CVec2 gr = point_source_grad(p.kappa, z, x);
      CHECK(std::abs(e.grad.x - gr.x) < 1e-8);
      CHECK(std::abs(e.grad.y - gr.y) < 1e-8);
    }
  }
}

TEST_CASE("disc scattering agrees with the series solution") {
  const WaveParameters p = params();
  const StarCurve disc = StarCurve::disc(1.0, 256);
  for (int b = 0; b <= 2; ++b) {
    const auto beta = static_cast<ProblemKind>(b);
    const BIESolution nys = bie_solve(beta, disc, p, PlaneWave{0.3});
    const SeriesSolution mie = mie_solve(beta, p, PlaneWave{0.3}, 1.0);
    const TraceBundle ta = nys.traces();
    const TraceBundle tm = mie.traces(256);
    CHECK((ta.xi.lambda - tm.xi.lambda).max_abs() < 1e-8);
    CHECK((ta.xi.sigma - tm.xi.sigma).max_abs() < 1e-8);
    for (const Vec2& x : {Vec2{1.8, 0.7}, Vec2{-2.0, 0.4}}) {
      CHECK(std::abs(nys.eval(x, FieldPart::Total).u -
                     mie.eval(x, FieldPart::Total).u) < 1e-9);
    }
  }
}

TEST_CASE("self-convergence certification and conditioning") {
  const WaveParameters p = params();
  const BIESolution sol = bie_solve(ProblemKind::Dirichlet, flower(128), p,
                                    PlaneWave{0.3}, true);
  CHECK(sol.self_convergence >= 0.0);
  CHECK(sol.self_convergence < 1e-9);
  CHECK(sol.condition_estimate < 1e12);
}

TEST_CASE("near-boundary evaluation is refused inside the collar") {
  const WaveParameters p = params();
  const StarCurve disc = StarCurve::disc(1.0, 128);
  const BIESolution sol = bie_solve(ProblemKind::Dirichlet, disc, p,
                                    PlaneWave{0.0});
  CHECK(sol.collar_width > 0.0);
  const double r = 1.0 + 0.25 * sol.collar_width;
  CHECK_THROWS_AS(sol.eval({r, 0.0}, FieldPart::Total), NearBoundaryEvaluation);
  CHECK_NOTHROW(sol.eval({1.0 + 2.0 * sol.collar_width, 0.0},
                         FieldPart::Total));
}
