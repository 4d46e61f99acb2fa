#include "helmsens/curve.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace helmsens {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

StarCurve StarCurve::make(const std::vector<Complex>& radius_coefficients,
                          std::size_t N) {
  const std::size_t highest = radius_coefficients.empty()
                                  ? 0
                                  : radius_coefficients.size() - 1;
  if (highest > 0 && N < 4 * highest)
    throw UnderResolved("need N >= 4 * highest harmonic, got N = " +
                        std::to_string(N) + " for harmonic " +
                        std::to_string(highest));
  BoundaryField rho(N);
  for (std::size_t j = 0; j < N; ++j) {
    const double phi = kTwoPi * static_cast<double>(j) / static_cast<double>(N);
    double value =
        radius_coefficients.empty() ? 0.0 : radius_coefficients[0].real();
    for (std::size_t m = 1; m < radius_coefficients.size(); ++m) {
      const double mm = static_cast<double>(m);
      value += 2.0 * (radius_coefficients[m] *
                      Complex(std::cos(mm * phi), std::sin(mm * phi)))
                         .real();
    }
    rho[j] = value;
  }
  return from_samples(rho, radius_coefficients);
}

StarCurve StarCurve::disc(double a, std::size_t N) {
  if (a <= 0.0) throw NonpositiveRadius("disc radius must be positive");
  return make({Complex(a, 0.0)}, N);
}

StarCurve StarCurve::from_samples(const BoundaryField& rho_samples,
                                  const std::vector<Complex>& coeffs) {
  StarCurve c;
  c.n_ = rho_samples.size();
  c.coeffs_ = coeffs;
  c.rho_ = rho_samples;
  c.build_geometry();
  return c;
}

void StarCurve::build_geometry() {
  const std::size_t N = n_;
  phi_.resize(N);
  speed_.resize(N);
  curv_.resize(N);
  pos_.resize(N);
  tau_.resize(N);
  nrm_.resize(N);

  rho_min_ = rho_[0].real();
  rho_max_ = rho_min_;
  for (std::size_t j = 0; j < N; ++j) {
    rho_min_ = std::min(rho_min_, rho_[j].real());
    rho_max_ = std::max(rho_max_, rho_[j].real());
  }
  if (rho_min_ <= 0.0)
    throw NonpositiveRadius("rho(phi) <= 0 at a node (min = " +
                            std::to_string(rho_min_) + ")");

  const BoundaryField drho = rho_.derivative();
  const BoundaryField ddrho = drho.derivative();

  length_ = 0.0;
  for (std::size_t j = 0; j < N; ++j) {
    const double phi = kTwoPi * static_cast<double>(j) / static_cast<double>(N);
    const double r = rho_[j].real();
    const double rp = drho[j].real();
    const double rpp = ddrho[j].real();
    const double c = std::cos(phi), s = std::sin(phi);

    phi_[j] = phi;
    pos_[j] = {r * c, r * s};
    const Vec2 xp{rp * c - r * s, rp * s + r * c};
    const Vec2 xpp{rpp * c - 2.0 * rp * s - r * c,
                   rpp * s + 2.0 * rp * c - r * s};
    const double sp = xp.norm();
    speed_[j] = sp;
    tau_[j] = {xp.x / sp, xp.y / sp};
    nrm_[j] = {xp.y / sp, -xp.x / sp};
    curv_[j] = (xp.x * xpp.y - xp.y * xpp.x) / (sp * sp * sp);
    length_ += sp * kTwoPi / static_cast<double>(N);
  }
}

double StarCurve::rho_at(double phi) const { return rho_.interp(phi).real(); }

Vec2 StarCurve::position_at(double phi) const {
  const double r = rho_at(phi);
  return {r * std::cos(phi), r * std::sin(phi)};
}

Vec2 StarCurve::derivative_at(double phi) const {
  const double r = rho_.interp(phi).real();
  const double rp = rho_.interp_derivative(phi).real();
  const double c = std::cos(phi), s = std::sin(phi);
  return {rp * c - r * s, rp * s + r * c};
}

BoundaryField StarCurve::arclength_derivative(const BoundaryField& u) const {
  BoundaryField d = u.derivative();
  for (std::size_t j = 0; j < n_; ++j) d[j] /= speed_[j];
  return d;
}

BoundaryField StarCurve::surface_laplacian(const BoundaryField& u) const {
  return arclength_derivative(arclength_derivative(u));
}

double StarCurve::sobolev_norm(const BoundaryField& u, double s) const {
  const std::vector<Complex> c = u.hat();
  const std::size_t N = c.size();
  double acc = 0.0;
  for (std::size_t m = 0; m < N; ++m) {
    const double n = static_cast<double>(fft_bin_mode(m, N));
    acc += std::pow(1.0 + n * n, s) * std::norm(c[m]);
  }
  return std::sqrt(acc * length_ / kTwoPi);
}

TangentField tangential_gradient(const BoundaryField& u, const StarCurve& c) {
  const BoundaryField dds = c.arclength_derivative(u);
  TangentField g{BoundaryField(c.size()), BoundaryField(c.size())};
  for (std::size_t j = 0; j < c.size(); ++j) {
    g.x[j] = dds[j] * c.tangent(j).x;
    g.y[j] = dds[j] * c.tangent(j).y;
  }
  return g;
}

BoundaryField tangential_divergence(const TangentField& w, const StarCurve& c) {
  BoundaryField along(c.size());
  for (std::size_t j = 0; j < c.size(); ++j)
    along[j] = w.x[j] * c.tangent(j).x + w.y[j] * c.tangent(j).y;
  return c.arclength_derivative(along);
}

}  // namespace helmsens
