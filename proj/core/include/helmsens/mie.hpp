#ifndef HELMSENS_MIE_HPP
#define HELMSENS_MIE_HPP

#include <vector>

#include "helmsens/geom.hpp"
#include "helmsens/regularity.hpp"
#include "helmsens/special.hpp"
#include "helmsens/traces.hpp"

namespace helmsens {

struct WaveParameters {
  double kappa = 2.0;   // exterior wavenumber (kappa_0 for transmission)
  double eta = 1.0;     // impedance coefficient, beta = 2
  double kappa1 = 1.0;  // interior wavenumber, beta = 3
  double mu0 = 1.0;
  double mu1 = 1.0;

  void validate(reg::ProblemKind beta) const;
};

struct PlaneWave {
  double angle = 0.0;  // propagation direction (cos, sin)
  Vec2 dir() const;
};

struct FieldEval {
  Complex u{0.0, 0.0};
  CVec2 grad;
  CMat2 hess;
};

enum class FieldPart { Total, Scattered, Incident, Interior };

// Separation-of-variables solution on the disc |x| = a. Mode coefficients are
// stored for n = -M..M at index n + M; the scattered/exterior part rides on
// H_n^{(1)}(kappa r) e^{i n phi}, the incident and interior parts on J_n.
class SeriesSolution {
public:
  reg::ProblemKind beta = reg::ProblemKind::Dirichlet;
  WaveParameters params;
  double a = 1.0;
  int M = 0;
  bool has_incident = false;
  PlaneWave incident;
  std::vector<Complex> sc;        // exterior outgoing coefficients
  std::vector<Complex> interior;  // J-basis coefficients (beta = 3)
  double max_mode_condition = 0.0;

  Complex coeff(const std::vector<Complex>& c, int n) const {
    return (n < -M || n > M) ? Complex(0.0, 0.0) : c[static_cast<size_t>(n + M)];
  }

  // Evaluation with exact gradients/Hessians (ladder recurrences; incident
  // plane wave handled in closed form). Total = Scattered + Incident in the
  // exterior; Interior is the beta=3 inner field (its own total).
  FieldEval eval(Vec2 x, FieldPart part) const;

  // Traces on the disc sampled at the N parameter nodes.
  TraceBundle traces(std::size_t N) const;
};

// Plane-wave scattering solve; N_modes = 0 picks the truncation automatically
// and certifies the tail (|a_M| <= 1e-14 max |a_n|).
SeriesSolution mie_solve(reg::ProblemKind beta, const WaveParameters& params,
                         const PlaneWave& incident, double a, int N_modes = 0);

// Purely outgoing solve with an arbitrary boundary datum g on the disc nodes:
// beta=0: gamma0 W = g; beta=1: gamma1 W = g; beta=2: (gamma1 + i eta
// gamma0) W = g.
SeriesSolution mie_radiating(reg::ProblemKind beta,
                             const WaveParameters& params,
                             const BoundaryField& g, double a);

// Transmission pair solve: [gamma0 W] = g0, [mu^{-1} gamma1 W] = g1, with an
// outgoing exterior part and a regular interior part.
SeriesSolution mie_radiating_transmission(const WaveParameters& params,
                                          const BoundaryField& g0,
                                          const BoundaryField& g1, double a);

}  // namespace helmsens

#endif
