#include <cmath>
#include <vector>

#include "doctest.h"
#include "helmsens/verify.hpp"

using namespace helmsens;
using reg::ProblemKind;

TEST_CASE("fit_slope recovers exact power laws") {
  std::vector<double> ts, r2, r1;
  for (double e = -1.5; e > -3.75; e -= 0.5) {
    const double t = std::pow(10.0, e);
    ts.push_back(t);
    r2.push_back(3.7 * t * t);
    r1.push_back(0.2 * t);
  }
  CHECK(fit_slope(ts, r2) == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(fit_slope(ts, r1) == doctest::Approx(1.0).epsilon(1e-12));
  // the largest rung is dropped: poison it and nothing changes
  std::vector<double> poisoned = r2;
  poisoned[0] *= 50.0;
  CHECK(fit_slope(ts, poisoned) == doctest::Approx(2.0).epsilon(1e-12));
  // floor-level rungs are skipped
  std::vector<double> floored = r2;
  floored.back() = 1e-16;
  CHECK(fit_slope(ts, floored) == doctest::Approx(2.0).epsilon(1e-12));
  CHECK_THROWS_AS(fit_slope({1e-2, 1e-3}, {1e-16, 1e-16}), SlopeUnstable);
}

TEST_CASE("region guard rejects annuli touching the boundary") {
  const StarCurve disc = StarCurve::disc(1.0, 64);
  CHECK_NOTHROW(require_region_clear({1.5, 2.0}, disc, 0.1));
  CHECK_THROWS_AS(require_region_clear({1.05, 2.0}, disc, 0.1),
                  RegionIntersectsBoundary);
  CHECK_THROWS_AS(require_region_clear({0.5, 0.8}, disc, 0.3),
                  RegionIntersectsBoundary);
}

TEST_CASE("annulus quadrature integrates polynomials exactly") {
  const VolumeGrid g = make_annulus_grid({1.0, 2.0}, 6, 32);
  double area = 0.0;
  for (double w : g.weights) area += w;
  CHECK(area == doctest::Approx(3.0 * 3.14159265358979323846).epsilon(1e-12));
  // L2 norm of f = x over the annulus: integral of r^2 cos^2 = pi(r1^4-r0^4)/4
  const double l2 = volume_l2([](Vec2 x) { return Complex(x.x, 0.0); }, g);
  CHECK(l2 * l2 ==
        doctest::Approx(3.14159265358979323846 * 15.0 / 4.0).epsilon(1e-12));
}

TEST_CASE("one cheap ladder end to end") {
  TaylorStudy st;
  st.problem.beta = ProblemKind::Dirichlet;
  st.problem.params.kappa = 2.0;
  st.problem.incident.angle = 0.3;
  st.problem.N = 64;
  st.velocity = VelocityField::dilation();
  st.target = StudyTarget::VolumeSd;
  st.ts = {1e-2, 3e-3, 1e-3};
  st.n_radial = 4;
  st.n_angular = 16;
  const StudyReport rep = taylor_study(st);
  CHECK(!rep.degenerate);
  CHECK(rep.slope > 1.9);
  CHECK(rep.remainders.size() == 3);
}

TEST_CASE("tangential SD vanishes on the invariant disc") {
  ProblemSpec spec;
  spec.beta = ProblemKind::Impedance;
  spec.params.kappa = 2.0;
  spec.params.eta = 1.0;
  spec.incident.angle = 0.3;
  spec.N = 128;
  CHECK(tangential_sd_max(spec, VelocityField::rotation()) < 1e-8);
  // a field with nonzero v.n is rejected by the guard
  CHECK_THROWS_AS(tangential_sd_max(spec, VelocityField::dilation()),
                  NormalMismatch);
}
