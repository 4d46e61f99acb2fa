#include "helmsens/norms.hpp"

#include <cmath>
#include <numbers>

namespace helmsens {

void gauss_legendre(std::size_t n, std::vector<double>& nodes,
                    std::vector<double>& weights) {
  nodes.resize(n);
  weights.resize(n);
  const double pi = std::numbers::pi;
  for (std::size_t i = 0; i < n; ++i) {
    // Newton from the Chebyshev-based initial guess.
    double x = std::cos(pi * (static_cast<double>(i) + 0.75) /
                        (static_cast<double>(n) + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (std::size_t k = 2; k <= n; ++k) {
        const double kk = static_cast<double>(k);
        const double p2 = ((2.0 * kk - 1.0) * x * p1 - (kk - 1.0) * p0) / kk;
        p0 = p1;
        p1 = p2;
      }
      dp = static_cast<double>(n) * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    nodes[i] = x;
    weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
}

VolumeGrid make_annulus_grid(const Annulus& region, std::size_t n_radial,
                             std::size_t n_angular) {
  if (!(0.0 < region.r0 && region.r0 < region.r1))
    throw PreconditionViolated("annulus needs 0 < r0 < r1");
  std::vector<double> gx, gw;
  gauss_legendre(n_radial, gx, gw);

  VolumeGrid grid;
  grid.region = region;
  const double mid = 0.5 * (region.r0 + region.r1);
  const double half = 0.5 * (region.r1 - region.r0);
  const double dphi = 2.0 * std::numbers::pi / static_cast<double>(n_angular);
  for (std::size_t i = 0; i < n_radial; ++i) {
    const double r = mid + half * gx[i];
    const double wr = half * gw[i] * r;  // area element r dr dphi
    for (std::size_t j = 0; j < n_angular; ++j) {
      const double phi = dphi * static_cast<double>(j);
      grid.points.push_back({r * std::cos(phi), r * std::sin(phi)});
      grid.weights.push_back(wr * dphi);
    }
  }
  return grid;
}

void require_region_clear(const Annulus& region, const StarCurve& curve,
                          double margin) {
  const double lo = curve.rho_min() - margin;
  const double hi = curve.rho_max() + margin;
  const bool inside = region.r1 <= lo;   // annulus entirely inside the sweep
  const bool outside = region.r0 >= hi;  // entirely outside
  if (!inside && !outside)
    throw RegionIntersectsBoundary(
        "annulus [" + std::to_string(region.r0) + ", " +
        std::to_string(region.r1) + "] meets the boundary sweep [" +
        std::to_string(lo) + ", " + std::to_string(hi) + "]");
}

double volume_l2(const ScalarField& f, const VolumeGrid& grid) {
  double acc = 0.0;
  for (std::size_t i = 0; i < grid.points.size(); ++i)
    acc += grid.weights[i] * std::norm(f(grid.points[i]));
  return std::sqrt(acc);
}

double volume_h1(const ScalarField& f, const GradField& grad,
                 const VolumeGrid& grid) {
  double acc = 0.0;
  for (std::size_t i = 0; i < grid.points.size(); ++i) {
    const CVec2 g = grad(grid.points[i]);
    acc += grid.weights[i] *
           (std::norm(f(grid.points[i])) + std::norm(g.x) + std::norm(g.y));
  }
  return std::sqrt(acc);
}

}  // namespace helmsens
