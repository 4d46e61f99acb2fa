#ifndef HELMSENS_BIE_HPP
#define HELMSENS_BIE_HPP

#include <vector>

#include "helmsens/curve.hpp"
#include "helmsens/mie.hpp"

namespace helmsens {

// Dense complex matrix, row-major; row index = collocation node.
struct CMatrix {
  std::size_t n = 0;
  std::vector<Complex> a;

  explicit CMatrix(std::size_t size = 0) : n(size), a(size * size) {}
  Complex& at(std::size_t i, std::size_t j) { return a[i * n + j]; }
  Complex at(std::size_t i, std::size_t j) const { return a[i * n + j]; }
};

// Boundary operators for the parameterized curve, discretized at the N nodes
// with the logarithmic-kernel splitting quadrature (Martensen-Kussmaul /
// Kress). Potential convention: Phi = (i/4) H_0^{(1)}(kappa |x - y|),
//   S  = gamma0 SL,  K = PV gamma0 DL,  Kp = PV gamma1 SL,  T = gamma1 DL,
// with the exterior jump relations gamma0+ DL = (K + 1/2)phi and
// gamma1+ SL = (Kp - 1/2)phi. T is assembled via the Maue identity
//   T phi = (1/|x'|) d/dt [ Stilde (dphi/dt) ] + kappa^2 S_nn phi.
struct BoundaryOperators {
  CMatrix S, K, Kp, T;
};

BoundaryOperators assemble_operators(const StarCurve& curve, double kappa);

// Periodic spectral differentiation matrix (even N).
CMatrix spectral_diff_matrix(std::size_t N);

// Nystrom combined-field solution on a starshaped curve. The scattered or
// radiating part is represented as u = DL(phi) + i*coupling*SL(phi) with
// coupling = -kappa for beta=0 and +kappa for beta=1,2.
class BIESolution {
public:
  StarCurve curve;
  reg::ProblemKind beta = reg::ProblemKind::Dirichlet;
  WaveParameters params;
  BoundaryField density;
  double coupling = 0.0;
  bool has_incident = false;
  PlaneWave incident;
  double condition_estimate = 0.0;
  double self_convergence = -1.0;  // < 0 when not certified
  double collar_width = 0.0;

  // Total-field traces at the curve nodes (incident included when present).
  TraceBundle traces() const { return traces_; }
  void set_traces(TraceBundle tb) { traces_ = std::move(tb); }

  // Off-boundary evaluation (value + gradient; Hessians are a series-backend
  // feature). Throws NearBoundaryEvaluation inside the collar.
  FieldEval eval(Vec2 x, FieldPart part) const;

  friend BIESolution bie_solve(reg::ProblemKind beta, const StarCurve& curve,
                               const WaveParameters& params,
                               const PlaneWave& incident, bool certify);
  friend BIESolution bie_radiating(reg::ProblemKind beta,
                                   const StarCurve& curve,
                                   const WaveParameters& params,
                                   const BoundaryField& g, bool certify);

private:
  TraceBundle traces_;
};

// Scattering solve, BC of (P_beta) enforced for the total field.
BIESolution bie_solve(reg::ProblemKind beta, const StarCurve& curve,
                      const WaveParameters& params, const PlaneWave& incident,
                      bool certify = false);

// Radiating solve with datum g: gamma0 u = g (beta=0), gamma1 u = g (beta=1),
// (gamma1 + i eta gamma0) u = g (beta=2).
BIESolution bie_radiating(reg::ProblemKind beta, const StarCurve& curve,
                          const WaveParameters& params, const BoundaryField& g,
                          bool certify = false);

}  // namespace helmsens

#endif
