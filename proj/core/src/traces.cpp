#include "helmsens/traces.hpp"

namespace helmsens {

TangentField full_gradient_on_curve(const BoundaryField& lambda,
                                    const BoundaryField& sigma,
                                    const StarCurve& c) {
  TangentField g = tangential_gradient(lambda, c);
  for (std::size_t j = 0; j < c.size(); ++j) {
    g.x[j] += sigma[j] * c.normal(j).x;
    g.y[j] += sigma[j] * c.normal(j).y;
  }
  return g;
}

BoundaryField gamma2_from_surface(const BoundaryField& lambda,
                                  const BoundaryField& sigma, double kappa,
                                  const StarCurve& c) {
  BoundaryField lap = c.surface_laplacian(lambda);
  BoundaryField out(c.size());
  for (std::size_t j = 0; j < c.size(); ++j)
    out[j] = -kappa * kappa * lambda[j] - c.curvature(j) * sigma[j] - lap[j];
  return out;
}

}  // namespace helmsens
