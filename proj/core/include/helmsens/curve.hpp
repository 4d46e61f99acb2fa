#ifndef HELMSENS_CURVE_HPP
#define HELMSENS_CURVE_HPP

#include <cstddef>
#include <vector>

#include "helmsens/fourier.hpp"
#include "helmsens/geom.hpp"

namespace helmsens {

// Starshaped boundary x(phi) = rho(phi)(cos phi, sin phi), rho > 0 given by a
// short one-sided Fourier coefficient list c_0..c_M:
//   rho(phi) = Re(c_0) + sum_{m=1..M} 2 Re(c_m e^{i m phi}).
// All geometry is cached at the N equispaced nodes; off-node values come from
// the trigonometric interpolant.
class StarCurve {
public:
  StarCurve() = default;  // empty; fill via the factories

  static StarCurve make(const std::vector<Complex>& radius_coefficients,
                        std::size_t N);
  // Unit circle scaled to radius a.
  static StarCurve disc(double a, std::size_t N);
  // Direct construction from rho samples (used by transform_curve refits).
  static StarCurve from_samples(const BoundaryField& rho_samples,
                                const std::vector<Complex>& coeffs_for_record);

  std::size_t size() const { return n_; }
  double node(std::size_t j) const { return phi_[j]; }

  const std::vector<Complex>& radius_coefficients() const { return coeffs_; }
  const BoundaryField& rho() const { return rho_; }

  Vec2 position(std::size_t j) const { return pos_[j]; }
  Vec2 tangent(std::size_t j) const { return tau_[j]; }   // unit, ccw
  Vec2 normal(std::size_t j) const { return nrm_[j]; }    // unit, outward
  double speed(std::size_t j) const { return speed_[j]; }  // |x'(phi)|
  double curvature(std::size_t j) const { return curv_[j]; }
  double length() const { return length_; }
  double rho_min() const { return rho_min_; }
  double rho_max() const { return rho_max_; }

  double rho_at(double phi) const;
  Vec2 position_at(double phi) const;
  Vec2 derivative_at(double phi) const;  // dx/dphi

  // d/ds along the curve: spectral d/dphi divided by |x'|.
  BoundaryField arclength_derivative(const BoundaryField& u) const;
  // Laplace-Beltrami d^2/ds^2.
  BoundaryField surface_laplacian(const BoundaryField& u) const;

  // Boundary Sobolev H^s surrogate on the parameter circle,
  // (sum_n (1+n^2)^s |u_n|^2 * L/2pi)^{1/2}.
  double sobolev_norm(const BoundaryField& u, double s) const;

private:
  void build_geometry();

  std::size_t n_ = 0;
  std::vector<Complex> coeffs_;
  BoundaryField rho_;
  std::vector<double> phi_, speed_, curv_;
  std::vector<Vec2> pos_, tau_, nrm_;
  double length_ = 0.0, rho_min_ = 0.0, rho_max_ = 0.0;
};

struct TangentField {
  BoundaryField x, y;  // Cartesian components at nodes
};

// grad_Gamma u = (du/ds) tau.
TangentField tangential_gradient(const BoundaryField& u, const StarCurve& c);
// div_Gamma w for tangential w: d(w . tau)/ds.
BoundaryField tangential_divergence(const TangentField& w, const StarCurve& c);

}  // namespace helmsens

#endif
