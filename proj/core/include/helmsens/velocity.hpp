#ifndef HELMSENS_VELOCITY_HPP
#define HELMSENS_VELOCITY_HPP

#include <string>
#include <vector>

#include "helmsens/curve.hpp"
#include "helmsens/geom.hpp"

namespace helmsens {

enum class VelocityKind { Constant, Dilation, Rotation, RadialBlend };

// First- and second-order data of v at a point. grad(i,j) = d v_i / d x_j.
// aprime = A'(0) = (div v) I - grad v - grad v^T. lap = componentwise
// Laplacian of v; note div A'(0) = -lap v, so no third derivatives are needed
// for the volume source f_beta.
struct VelocityJet {
  Vec2 v;
  Mat2 grad;
  double div = 0.0;
  Mat2 aprime;
  Vec2 lap;
};

// Perturbation velocity with an analytic volume extension. Constant, Dilation
// (v = x) and Rotation (v = (-y, x)) are global; RadialBlend is
// v(x) = psi(|x|) V(phi) with V band-limited (StarCurve coefficient
// convention per Cartesian component) and psi a C-infinity bump on [r0, r1]
// equal to 1 + psi'(rc) (r - rc) on a plateau around rc.
class VelocityField {
public:
  static VelocityField constant(Vec2 c);
  static VelocityField dilation();
  static VelocityField rotation();
  static VelocityField radial_blend(std::vector<Complex> vx_coeffs,
                                    std::vector<Complex> vy_coeffs, double r0,
                                    double rc, double r1, double slope);

  VelocityKind kind() const { return kind_; }
  bool global() const { return kind_ != VelocityKind::RadialBlend; }
  // True where eval/jet are defined (everywhere for global kinds, the closed
  // collar r0 <= |x| <= r1 plus the zero outside... the blend vanishes
  // identically off the collar, so RadialBlend is also defined everywhere;
  // supported() reports where it can be nonzero).
  bool supported(Vec2 x) const;

  Vec2 eval(Vec2 x) const;
  VelocityJet jet(Vec2 x) const;

  std::string describe() const;

private:
  VelocityField() = default;

  VelocityKind kind_ = VelocityKind::Constant;
  Vec2 c_{};                           // Constant
  std::vector<Complex> vx_, vy_;       // RadialBlend angular profiles
  double r0_ = 0.0, rc_ = 0.0, r1_ = 0.0, slope_ = 0.0;
  double plateau_ = 0.0;               // half-width of the psi == linear band

  void psi(double r, double& p, double& dp, double& ddp) const;
};

// Traces of v on a curve plus the tangential calculus the derivative data
// formulas need. grad_Gamma(v.n) = dvn_ds * tau.
struct BoundaryVelocity {
  BoundaryField vx, vy;
  BoundaryField vn, vtau;
  BoundaryField dvn_ds;
  BoundaryField div_gamma;  // div_Gamma v = tau . dv/ds
};

BoundaryVelocity sample_on(const VelocityField& v, const StarCurve& c);
std::vector<VelocityJet> jets_on(const VelocityField& v, const StarCurve& c);

// Image of the curve under x -> x + t v(x), refit in the StarCurve form:
// per-angle Newton on the trigonometric interpolant of the mapped nodes,
// then a spectral refit whose midpoint residual is verified. Throws
// NotStarshaped if the image fails the polar test, FitResidualExceeded if the
// refit misses its own midpoints.
StarCurve transform_curve(const StarCurve& c, const VelocityField& v, double t);

}  // namespace helmsens

#endif
