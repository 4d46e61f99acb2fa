#include "helmsens/velocity.hpp"

#include <cmath>
#include <sstream>

namespace helmsens {

namespace {

// C-infinity smoothstep S(s) = g(s)/(g(s)+g(1-s)), g(s) = exp(-1/s): 0 for
// s <= 0, 1 for s >= 1, flat to all orders at both ends.
void smoothstep(double s, double& v, double& dv, double& ddv) {
  if (s <= 0.0) {
    v = dv = ddv = 0.0;
    return;
  }
  if (s >= 1.0) {
    v = 1.0;
    dv = ddv = 0.0;
    return;
  }
  const double u = 1.0 - s;
  const double g = std::exp(-1.0 / s), h = std::exp(-1.0 / u);
  const double gp = g / (s * s);
  const double hp = -h / (u * u);  // d/ds of h(1-s)
  const double gpp = g * (1.0 / (s * s * s * s) - 2.0 / (s * s * s));
  const double hpp = h * (1.0 / (u * u * u * u) - 2.0 / (u * u * u));
  const double d = g + h;
  v = g / d;
  dv = (gp * h - g * hp) / (d * d);
  ddv = (gpp * h - g * hpp) / (d * d) -
        2.0 * (gp * h - g * hp) * (gp + hp) / (d * d * d);
}

// Band-limited angular profile and its first two derivatives, StarCurve
// one-sided coefficient convention.
void eval_profile(const std::vector<Complex>& c, double phi, double& w,
                  double& dw, double& ddw) {
  w = c.empty() ? 0.0 : c[0].real();
  dw = ddw = 0.0;
  for (std::size_t m = 1; m < c.size(); ++m) {
    const double mm = static_cast<double>(m);
    const Complex e(std::cos(mm * phi), std::sin(mm * phi));
    w += 2.0 * (c[m] * e).real();
    dw += 2.0 * (c[m] * Complex(0.0, mm) * e).real();
    ddw += 2.0 * (c[m] * Complex(-mm * mm, 0.0) * e).real();
  }
}

}  // namespace

VelocityField VelocityField::constant(Vec2 c) {
  VelocityField v;
  v.kind_ = VelocityKind::Constant;
  v.c_ = c;
  return v;
}

VelocityField VelocityField::dilation() {
  VelocityField v;
  v.kind_ = VelocityKind::Dilation;
  return v;
}

VelocityField VelocityField::rotation() {
  VelocityField v;
  v.kind_ = VelocityKind::Rotation;
  return v;
}

VelocityField VelocityField::radial_blend(std::vector<Complex> vx_coeffs,
                                          std::vector<Complex> vy_coeffs,
                                          double r0, double rc, double r1,
                                          double slope) {
  if (!(0.0 < r0 && r0 < rc && rc < r1))
    throw PreconditionViolated("radial blend needs 0 < r0 < rc < r1");
  VelocityField v;
  v.kind_ = VelocityKind::RadialBlend;
  v.vx_ = std::move(vx_coeffs);
  v.vy_ = std::move(vy_coeffs);
  v.r0_ = r0;
  v.rc_ = rc;
  v.r1_ = r1;
  v.slope_ = slope;
  v.plateau_ = 0.5 * std::min(rc - r0, r1 - rc);
  return v;
}

// psi(r) = (1 + slope (r - rc)) B(r), B a plateau bump: exactly 1 on
// [rc - w, rc + w], C-infinity smoothstep transitions down to 0 at r0 and r1.
// On the plateau (where the curve and its small perturbations live) psi is a
// plain affine function, so all boundary data stay spectrally smooth.
void VelocityField::psi(double r, double& p, double& dp, double& ddp) const {
  if (r <= r0_ || r >= r1_) {
    p = dp = ddp = 0.0;
    return;
  }
  const double lo = rc_ - plateau_, hi = rc_ + plateau_;
  double b = 1.0, db = 0.0, ddb = 0.0;
  if (r < lo) {
    const double w = lo - r0_;
    smoothstep((r - r0_) / w, b, db, ddb);
    db /= w;
    ddb /= w * w;
  } else if (r > hi) {
    const double w = r1_ - hi;
    smoothstep((r1_ - r) / w, b, db, ddb);
    db /= -w;
    ddb /= w * w;
  }
  const double lin = 1.0 + slope_ * (r - rc_);
  p = lin * b;
  dp = slope_ * b + lin * db;
  ddp = 2.0 * slope_ * db + lin * ddb;
}

bool VelocityField::supported(Vec2 x) const {
  if (global()) return true;
  const double r = x.norm();
  return r > r0_ && r < r1_;
}

Vec2 VelocityField::eval(Vec2 x) const {
  switch (kind_) {
    case VelocityKind::Constant:
      return c_;
    case VelocityKind::Dilation:
      return x;
    case VelocityKind::Rotation:
      return {-x.y, x.x};
    case VelocityKind::RadialBlend:
      break;
  }
  const double r = x.norm();
  double p, dp, ddp;
  psi(r, p, dp, ddp);
  if (p == 0.0 && dp == 0.0) return {0.0, 0.0};
  const double phi = std::atan2(x.y, x.x);
  double wx, dwx, ddwx, wy, dwy, ddwy;
  eval_profile(vx_, phi, wx, dwx, ddwx);
  eval_profile(vy_, phi, wy, dwy, ddwy);
  return {p * wx, p * wy};
}

VelocityJet VelocityField::jet(Vec2 x) const {
  VelocityJet jet;
  switch (kind_) {
    case VelocityKind::Constant:
      jet.v = c_;
      return jet;
    case VelocityKind::Dilation:
      jet.v = x;
      jet.grad = Mat2::identity();
      jet.div = 2.0;
      // A'(0) = 2I - I - I = 0.
      return jet;
    case VelocityKind::Rotation:
      jet.v = {-x.y, x.x};
      jet.grad(0, 1) = -1.0;
      jet.grad(1, 0) = 1.0;
      jet.div = 0.0;  // antisymmetric gradient: A'(0) = 0 too
      return jet;
    case VelocityKind::RadialBlend:
      break;
  }

  const double r = x.norm();
  double p, dp, ddp;
  psi(r, p, dp, ddp);
  const double phi = std::atan2(x.y, x.x);
  const double c = std::cos(phi), s = std::sin(phi);

  // For f(r,phi) = psi(r) W(phi):
  //   f_x  = c f_r - (s/r) f_phi,           f_y  = s f_r + (c/r) f_phi
  //   f_xx = c^2 f_rr - 2cs/r f_rphi + s^2/r^2 f_phiphi + s^2/r f_r
  //          + 2cs/r^2 f_phi
  //   f_yy = s^2 f_rr + 2cs/r f_rphi + c^2/r^2 f_phiphi + c^2/r f_r
  //          - 2cs/r^2 f_phi
  // so lap f = f_rr + f_r/r + f_phiphi/r^2.
  auto component = [&](const std::vector<Complex>& prof, double& vx,
                       double& gx, double& gy, double& lap) {
    double w, dw, ddw;
    eval_profile(prof, phi, w, dw, ddw);
    const double fr = dp * w;
    const double frr = ddp * w;
    const double fphi = p * dw;
    const double fphiphi = p * ddw;
    vx = p * w;
    gx = c * fr - s * fphi / r;
    gy = s * fr + c * fphi / r;
    lap = frr + fr / r + fphiphi / (r * r);
  };

  double lx, ly;
  component(vx_, jet.v.x, jet.grad(0, 0), jet.grad(0, 1), lx);
  component(vy_, jet.v.y, jet.grad(1, 0), jet.grad(1, 1), ly);
  jet.lap = {lx, ly};
  jet.div = jet.grad(0, 0) + jet.grad(1, 1);
  jet.aprime = jet.div * Mat2::identity() - jet.grad - jet.grad.transpose();
  return jet;
}

std::string VelocityField::describe() const {
  std::ostringstream os;
  switch (kind_) {
    case VelocityKind::Constant:
      os << "constant(" << c_.x << "," << c_.y << ")";
      break;
    case VelocityKind::Dilation:
      os << "dilation";
      break;
    case VelocityKind::Rotation:
      os << "rotation";
      break;
    case VelocityKind::RadialBlend:
      os << "radial_blend(r0=" << r0_ << ",rc=" << rc_ << ",r1=" << r1_
         << ",slope=" << slope_ << ",modes=" << vx_.size() << ")";
      break;
  }
  return os.str();
}

BoundaryVelocity sample_on(const VelocityField& v, const StarCurve& curve) {
  const std::size_t N = curve.size();
  BoundaryVelocity bv{BoundaryField(N), BoundaryField(N), BoundaryField(N),
                      BoundaryField(N), BoundaryField(N), BoundaryField(N)};
  for (std::size_t j = 0; j < N; ++j) {
    const Vec2 val = v.eval(curve.position(j));
    bv.vx[j] = val.x;
    bv.vy[j] = val.y;
    bv.vn[j] = dot(val, curve.normal(j));
    bv.vtau[j] = dot(val, curve.tangent(j));
  }
  bv.dvn_ds = curve.arclength_derivative(bv.vn);
  const BoundaryField dvx = curve.arclength_derivative(bv.vx);
  const BoundaryField dvy = curve.arclength_derivative(bv.vy);
  for (std::size_t j = 0; j < N; ++j)
    bv.div_gamma[j] =
        dvx[j] * curve.tangent(j).x + dvy[j] * curve.tangent(j).y;
  return bv;
}

std::vector<VelocityJet> jets_on(const VelocityField& v, const StarCurve& c) {
  std::vector<VelocityJet> jets(c.size());
  for (std::size_t j = 0; j < c.size(); ++j) jets[j] = v.jet(c.position(j));
  return jets;
}

StarCurve transform_curve(const StarCurve& c, const VelocityField& v,
                          double t) {
  const std::size_t N = c.size();
  const double two_pi = 2.0 * std::acos(-1.0);
  BoundaryField Y(N);  // mapped curve as x1 + i x2, still parameterized by phi
  for (std::size_t j = 0; j < N; ++j) {
    const Vec2 x = c.position(j);
    const Vec2 w = v.eval(x);
    Y[j] = Complex(x.x + t * w.x, x.y + t * w.y);
  }

  // Polar angle of the mapped nodes must wind monotonically once.
  double prev = std::arg(Y[0]);
  double total = 0.0;
  for (std::size_t j = 1; j <= N; ++j) {
    const double ang = std::arg(Y[j % N]);
    double d = ang - prev;
    while (d <= -two_pi / 2.0) d += two_pi;
    while (d > two_pi / 2.0) d -= two_pi;
    if (d <= 0.0)
      throw NotStarshaped("transported curve is not starshaped about 0");
    total += d;
    prev = ang;
  }
  if (std::abs(total - two_pi) > 1e-8)
    throw NotStarshaped("transported curve does not wind once about 0");

  // rho at a target polar angle: Newton in the parameter phi on
  // Im(Y(phi) e^{-i theta}) = 0.
  auto radius_at = [&](double theta) {
    double phi = theta;
    for (int it = 0; it < 60; ++it) {
      const Complex rot(std::cos(theta), -std::sin(theta));
      const Complex z = Y.interp(phi) * rot;
      if (std::abs(z.imag()) <= 1e-13 * (1.0 + std::abs(z))) {
        if (z.real() <= 0.0)
          throw NotStarshaped("transported curve crosses the origin ray");
        return z.real();
      }
      const Complex dz = Y.interp_derivative(phi) * rot;
      if (dz.imag() == 0.0) break;
      phi -= z.imag() / dz.imag();
    }
    throw NotStarshaped("polar reparameterization did not converge");
  };

  BoundaryField rho(N);
  for (std::size_t k = 0; k < N; ++k)
    rho[k] = radius_at(two_pi * static_cast<double>(k) / static_cast<double>(N));

  // One-sided record coefficients (Nyquist bin lands in the refit residual).
  const std::vector<Complex> hat = rho.hat();
  std::vector<Complex> coeffs(N / 2);
  for (std::size_t m = 0; m < N / 2; ++m) coeffs[m] = hat[m];

  // Midpoint residual of the spectral refit against fresh Newton values.
  double worst = 0.0;
  for (std::size_t k = 0; k < N; ++k) {
    const double theta =
        two_pi * (static_cast<double>(k) + 0.5) / static_cast<double>(N);
    worst = std::max(worst,
                     std::abs(rho.interp(theta).real() - radius_at(theta)));
  }
  if (worst > 1e-8 * c.rho_max())
    throw FitResidualExceeded("transported curve refit residual " +
                              std::to_string(worst));

  return StarCurve::from_samples(rho, coeffs);
}

}  // namespace helmsens
