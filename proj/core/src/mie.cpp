#include "helmsens/mie.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace helmsens {

namespace {

constexpr Complex kI(0.0, 1.0);

// i^n for any integer n.
Complex ipow(int n) {
  switch (((n % 4) + 4) % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

// Table of C_n(x) for n = 0..nmax; negative orders by C_{-n} = (-1)^n C_n.
struct CylTable {
  std::vector<Complex> c;
  Complex operator()(int n) const {
    const int a = std::abs(n);
    const Complex v = c[static_cast<std::size_t>(a)];
    return (n < 0 && a % 2 == 1) ? -v : v;
  }
};

CylTable table_j(int nmax, double x) {
  CylTable t;
  t.c.resize(static_cast<std::size_t>(nmax) + 1);
  for (int n = 0; n <= nmax; ++n) t.c[static_cast<std::size_t>(n)] = bessel_j(n, x);
  return t;
}

CylTable table_h(int nmax, double x) {
  CylTable t;
  t.c.resize(static_cast<std::size_t>(nmax) + 1);
  for (int n = 0; n <= nmax; ++n) t.c[static_cast<std::size_t>(n)] = hankel1(n, x);
  return t;
}

// Sums coefficients over the cylinder basis C_n(kappa r) e^{i n phi} with the
// ladder identities
//   (d_x + i d_y)[C_n e^{in phi}] = -kappa C_{n+1} e^{i(n+1)phi},
//   (d_x - i d_y)[C_n e^{in phi}] =  kappa C_{n-1} e^{i(n-1)phi},
// which give exact gradients and Hessians without finite differences.
FieldEval eval_series(const std::vector<Complex>& coeffs, int M, double kappa,
                      Vec2 x, bool hankel_basis) {
  const double r = x.norm();
  const double phi = std::atan2(x.y, x.x);
  const CylTable tab = hankel_basis ? table_h(M + 2, kappa * r)
                                    : table_j(M + 2, kappa * r);

  FieldEval e;
  const Complex ephi(std::cos(phi), std::sin(phi));
  // e^{i n phi} for n = -M-2 .. M+2, indexed n + M + 2.
  std::vector<Complex> ex(static_cast<std::size_t>(2 * M + 5));
  ex[static_cast<std::size_t>(M + 2)] = 1.0;
  for (int n = 1; n <= M + 2; ++n) {
    ex[static_cast<std::size_t>(M + 2 + n)] =
        ex[static_cast<std::size_t>(M + 1 + n)] * ephi;
    ex[static_cast<std::size_t>(M + 2 - n)] =
        std::conj(ex[static_cast<std::size_t>(M + 2 + n)]);
  }
  auto E = [&](int n) { return ex[static_cast<std::size_t>(n + M + 2)]; };

  const double k2 = kappa * kappa;
  for (int n = -M; n <= M; ++n) {
    const Complex cn = coeffs[static_cast<std::size_t>(n + M)];
    if (cn == Complex(0.0, 0.0)) continue;
    const Complex u = cn * tab(n) * E(n);
    const Complex dp = -kappa * cn * tab(n + 1) * E(n + 1);
    const Complex dm = kappa * cn * tab(n - 1) * E(n - 1);
    const Complex pp = k2 * cn * tab(n + 2) * E(n + 2);
    const Complex qq = k2 * cn * tab(n - 2) * E(n - 2);

    e.u += u;
    e.grad.x += 0.5 * (dp + dm);
    e.grad.y += (dp - dm) / (2.0 * kI);
    e.hess(0, 0) += 0.25 * (pp + qq) - 0.5 * k2 * u;
    e.hess(1, 1) += -0.25 * (pp + qq) - 0.5 * k2 * u;
    const Complex mixed = (pp - qq) / (4.0 * kI);
    e.hess(0, 1) += mixed;
    e.hess(1, 0) += mixed;
  }
  return e;
}

FieldEval eval_plane_wave(const PlaneWave& w, double kappa, Vec2 x) {
  const Vec2 d = w.dir();
  const Complex u = std::exp(kI * (kappa * dot(d, x)));
  FieldEval e;
  e.u = u;
  e.grad = {kI * kappa * d.x * u, kI * kappa * d.y * u};
  const double k2 = kappa * kappa;
  e.hess(0, 0) = -k2 * d.x * d.x * u;
  e.hess(0, 1) = e.hess(1, 0) = -k2 * d.x * d.y * u;
  e.hess(1, 1) = -k2 * d.y * d.y * u;
  return e;
}

// Condition number of a column-equilibrated complex 2x2 (exact 2x2 SVD).
double cond2x2(Complex a00, Complex a01, Complex a10, Complex a11) {
  const double c0 = std::abs(a00) + std::abs(a10);
  const double c1 = std::abs(a01) + std::abs(a11);
  a00 /= c0; a10 /= c0; a01 /= c1; a11 /= c1;
  const double g00 = std::norm(a00) + std::norm(a10);
  const double g11 = std::norm(a01) + std::norm(a11);
  const Complex g01 = std::conj(a00) * a01 + std::conj(a10) * a11;
  const double tr = g00 + g11;
  const double disc =
      std::sqrt(std::max(0.0, (g00 - g11) * (g00 - g11) + 4.0 * std::norm(g01)));
  const double lmax = 0.5 * (tr + disc), lmin = 0.5 * (tr - disc);
  if (lmin <= 0.0) return 1e300;
  return std::sqrt(lmax / lmin);
}

void accumulate(FieldEval& into, const FieldEval& from) {
  into.u += from.u;
  into.grad = into.grad + from.grad;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) into.hess(i, j) += from.hess(i, j);
}

}  // namespace

void WaveParameters::validate(reg::ProblemKind beta) const {
  if (kappa <= 0.0) throw PreconditionViolated("requires kappa > 0");
  if (beta == reg::ProblemKind::Impedance && eta <= 0.0)
    throw PreconditionViolated("impedance problem requires eta > 0");
  if (beta == reg::ProblemKind::Transmission) {
    if (kappa1 <= 0.0 || mu0 <= 0.0 || mu1 <= 0.0)
      throw PreconditionViolated("transmission requires kappa1, mu0, mu1 > 0");
    if (kappa == kappa1 && mu0 == mu1)
      throw PreconditionViolated(
          "transmission requires kappa0 != kappa1 or mu0 != mu1");
  }
}

Vec2 PlaneWave::dir() const { return {std::cos(angle), std::sin(angle)}; }

FieldEval SeriesSolution::eval(Vec2 x, FieldPart part) const {
  const double r = x.norm();
  switch (part) {
    case FieldPart::Incident:
      if (!has_incident) return {};
      return eval_plane_wave(incident, params.kappa, x);
    case FieldPart::Scattered:
      if (r < a * (1.0 - 1e-12))
        throw WrongRegion("scattered field requested inside the disc");
      return eval_series(sc, M, params.kappa, x, true);
    case FieldPart::Interior: {
      if (beta != reg::ProblemKind::Transmission)
        throw WrongRegion("no interior field for this problem kind");
      if (r > a * (1.0 + 1e-12))
        throw WrongRegion("interior field requested outside the disc");
      return eval_series(interior, M, params.kappa1, x, false);
    }
    case FieldPart::Total:
      break;
  }
  FieldEval e = eval_series(sc, M, params.kappa, x, true);
  if (has_incident) accumulate(e, eval_plane_wave(incident, params.kappa, x));
  return e;
}

TraceBundle SeriesSolution::traces(std::size_t N) const {
  TraceBundle tb{CauchyData{BoundaryField(N), BoundaryField(N)},
                 BoundaryField(N), false, BoundaryField(N)};
  for (std::size_t j = 0; j < N; ++j) {
    const double phi =
        2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(N);
    const Vec2 n{std::cos(phi), std::sin(phi)};
    const Vec2 x{a * n.x, a * n.y};
    const FieldEval e = eval(x, FieldPart::Total);
    tb.xi.lambda[j] = e.u;
    tb.xi.sigma[j] = dot(e.grad, n);
    tb.gamma2[j] = n.x * (e.hess(0, 0) * n.x + e.hess(0, 1) * n.y) +
                   n.y * (e.hess(1, 0) * n.x + e.hess(1, 1) * n.y);
  }
  if (beta == reg::ProblemKind::Transmission) {
    tb.has_interior = true;
    tb.xi.has_interior = true;
    tb.xi.lambda_in = BoundaryField(N);
    tb.xi.sigma_in = BoundaryField(N);
    for (std::size_t j = 0; j < N; ++j) {
      const double phi = 2.0 * std::numbers::pi * static_cast<double>(j) /
                         static_cast<double>(N);
      const Vec2 n{std::cos(phi), std::sin(phi)};
      const Vec2 x{a * n.x, a * n.y};
      const FieldEval e = eval(x, FieldPart::Interior);
      tb.xi.lambda_in[j] = e.u;
      tb.xi.sigma_in[j] = dot(e.grad, n);
      tb.gamma2_in[j] = n.x * (e.hess(0, 0) * n.x + e.hess(0, 1) * n.y) +
                        n.y * (e.hess(1, 0) * n.x + e.hess(1, 1) * n.y);
    }
  }
  return tb;
}

SeriesSolution mie_solve(reg::ProblemKind beta, const WaveParameters& params,
                         const PlaneWave& incident, double a, int N_modes) {
  params.validate(beta);
  if (a <= 0.0) throw NonpositiveRadius("disc radius must be positive");
  validate_bessel_backend(params.kappa * a);

  const bool auto_m = N_modes <= 0;
  int M = auto_m
              ? static_cast<int>(std::ceil(params.kappa * a)) + 24
              : N_modes;

  for (;;) {
    SeriesSolution s;
    s.beta = beta;
    s.params = params;
    s.a = a;
    s.M = M;
    s.has_incident = true;
    s.incident = incident;
    s.sc.assign(static_cast<std::size_t>(2 * M + 1), Complex(0.0, 0.0));
    if (beta == reg::ProblemKind::Transmission)
      s.interior.assign(static_cast<std::size_t>(2 * M + 1), Complex(0.0, 0.0));
    else
      s.interior.clear();

    const double k0a = params.kappa * a;
    const double k1a = params.kappa1 * a;
    for (int n = -M; n <= M; ++n) {
      const Complex dn = ipow(n) * std::exp(-kI * (static_cast<double>(n) *
                                                   incident.angle));
      const std::size_t idx = static_cast<std::size_t>(n + M);
      switch (beta) {
        case reg::ProblemKind::Dirichlet:
          s.sc[idx] = -dn * bessel_j(n, k0a) / hankel1(n, k0a);
          break;
        case reg::ProblemKind::Neumann:
          s.sc[idx] = -dn * bessel_j_prime(n, k0a) / hankel1_prime(n, k0a);
          break;
        case reg::ProblemKind::Impedance: {
          const Complex num = params.kappa * bessel_j_prime(n, k0a) +
                              kI * params.eta * bessel_j(n, k0a);
          const Complex den = params.kappa * hankel1_prime(n, k0a) +
                              kI * params.eta * hankel1(n, k0a);
          s.sc[idx] = -dn * num / den;
          break;
        }
        case reg::ProblemKind::Transmission: {
          // [gamma0 U] = 0, [mu^{-1} gamma1 U] = 0 per mode.
          const Complex a00 = hankel1(n, k0a);
          const Complex a01 = -bessel_j(n, k1a);
          const Complex a10 =
              (params.kappa / params.mu0) * hankel1_prime(n, k0a);
          const Complex a11 =
              -(params.kappa1 / params.mu1) * bessel_j_prime(n, k1a);
          const Complex b0 = -dn * bessel_j(n, k0a);
          const Complex b1 =
              -dn * (params.kappa / params.mu0) * bessel_j_prime(n, k0a);
          const Complex det = a00 * a11 - a01 * a10;
          const double cond = cond2x2(a00, a01, a10, a11);
          s.max_mode_condition = std::max(s.max_mode_condition, cond);
          if (cond > 1e12)
            throw ResonanceIllConditioned(
                "transmission mode " + std::to_string(n) +
                " condition exceeds 1e12");
          s.sc[idx] = (b0 * a11 - a01 * b1) / det;
          s.interior[idx] = (a00 * b1 - b0 * a10) / det;
          break;
        }
      }
    }

    double cmax = 0.0;
    for (const Complex& c : s.sc) cmax = std::max(cmax, std::abs(c));
    const double tail = std::max(std::abs(s.sc.front()), std::abs(s.sc.back()));
    if (!auto_m || tail <= 1e-14 * cmax || M >= 90) return s;
    M += 12;
  }
}

SeriesSolution mie_radiating(reg::ProblemKind beta,
                             const WaveParameters& params,
                             const BoundaryField& g, double a) {
  params.validate(beta);
  const std::vector<Complex> gh = g.hat();
  const std::size_t N = gh.size();
  const int M = static_cast<int>(N / 2) - 1;

  SeriesSolution s;
  s.beta = beta;
  s.params = params;
  s.a = a;
  s.M = M;
  s.sc.assign(static_cast<std::size_t>(2 * M + 1), Complex(0.0, 0.0));

  double gmax = 0.0;
  for (const Complex& c : gh) gmax = std::max(gmax, std::abs(c));
  const double k0a = params.kappa * a;
  for (int n = -M; n <= M; ++n) {
    const Complex gn = gh[static_cast<std::size_t>((n + static_cast<int>(N)) %
                                                   static_cast<int>(N))];
    if (std::abs(gn) < 1e-16 * gmax) continue;
    Complex den;
    switch (beta) {
      case reg::ProblemKind::Dirichlet:
        den = hankel1(n, k0a);
        break;
      case reg::ProblemKind::Neumann:
        den = params.kappa * hankel1_prime(n, k0a);
        break;
      case reg::ProblemKind::Impedance:
        den = params.kappa * hankel1_prime(n, k0a) +
              kI * params.eta * hankel1(n, k0a);
        break;
      default:
        throw NotSupported("use mie_radiating_transmission for beta = 3");
    }
    s.sc[static_cast<std::size_t>(n + M)] = gn / den;
  }
  return s;
}

SeriesSolution mie_radiating_transmission(const WaveParameters& params,
                                          const BoundaryField& g0,
                                          const BoundaryField& g1, double a) {
  params.validate(reg::ProblemKind::Transmission);
  const std::vector<Complex> g0h = g0.hat();
  const std::vector<Complex> g1h = g1.hat();
  const std::size_t N = g0h.size();
  const int M = static_cast<int>(N / 2) - 1;

  SeriesSolution s;
  s.beta = reg::ProblemKind::Transmission;
  s.params = params;
  s.a = a;
  s.M = M;
  s.sc.assign(static_cast<std::size_t>(2 * M + 1), Complex(0.0, 0.0));
  s.interior.assign(static_cast<std::size_t>(2 * M + 1), Complex(0.0, 0.0));

  double gmax = 0.0;
  for (const Complex& c : g0h) gmax = std::max(gmax, std::abs(c));
  for (const Complex& c : g1h) gmax = std::max(gmax, std::abs(c));
  const double k0a = params.kappa * a;
  const double k1a = params.kappa1 * a;
  for (int n = -M; n <= M; ++n) {
    const std::size_t bin = static_cast<std::size_t>(
        (n + static_cast<int>(N)) % static_cast<int>(N));
    const Complex b0 = g0h[bin];
    const Complex b1 = g1h[bin];
    if (std::abs(b0) < 1e-16 * gmax && std::abs(b1) < 1e-16 * gmax) continue;
    const Complex a00 = hankel1(n, k0a);
    const Complex a01 = -bessel_j(n, k1a);
    const Complex a10 = (params.kappa / params.mu0) * hankel1_prime(n, k0a);
    const Complex a11 = -(params.kappa1 / params.mu1) * bessel_j_prime(n, k1a);
    const Complex det = a00 * a11 - a01 * a10;
    const double cond = cond2x2(a00, a01, a10, a11);
    s.max_mode_condition = std::max(s.max_mode_condition, cond);
    if (cond > 1e12)
      throw ResonanceIllConditioned("transmission mode " + std::to_string(n) +
                                    " condition exceeds 1e12");
    s.sc[static_cast<std::size_t>(n + M)] = (b0 * a11 - a01 * b1) / det;
    s.interior[static_cast<std::size_t>(n + M)] = (a00 * b1 - b0 * a10) / det;
  }
  return s;
}

}  // namespace helmsens
