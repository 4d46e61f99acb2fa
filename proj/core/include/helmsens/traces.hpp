#ifndef HELMSENS_TRACES_HPP
#define HELMSENS_TRACES_HPP

#include "helmsens/curve.hpp"

namespace helmsens {

// Trace pair xi = (lambda, sigma) = (gamma0 U, gamma1 U); gamma1 uses the
// exterior-pointing normal on both sides. The interior pair is populated for
// transmission solves only.
struct CauchyData {
  BoundaryField lambda, sigma;
  bool has_interior = false;
  BoundaryField lambda_in, sigma_in;

  BoundaryField jump_dirichlet() const { return lambda - lambda_in; }
  // [mu^{-1} gamma1 U]: caller scales the sides, this is the raw difference.
  BoundaryField jump(const BoundaryField& a, const BoundaryField& b) const {
    return a - b;
  }
};

// Full derivative data on the boundary, as produced by the solvers.
struct TraceBundle {
  CauchyData xi;
  BoundaryField gamma2;     // second-order trace (exterior side)
  bool has_interior = false;
  BoundaryField gamma2_in;  // interior side, transmission
};

// Full gradient on Gamma reconstructed from Cauchy data:
// grad U = sigma n + grad_Gamma lambda.
TangentField full_gradient_on_curve(const BoundaryField& lambda,
                                    const BoundaryField& sigma,
                                    const StarCurve& c);

// gamma2 from the on-surface decomposition of the Laplacian:
// gamma2 U = -kappa^2 gamma0 U - H gamma1 U - Lap_Gamma gamma0 U.
BoundaryField gamma2_from_surface(const BoundaryField& lambda,
                                  const BoundaryField& sigma, double kappa,
                                  const StarCurve& c);

}  // namespace helmsens

#endif
