#include "helmsens/bie.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <numbers>

namespace helmsens {

namespace {

constexpr Complex kI(0.0, 1.0);
constexpr double kPi = std::numbers::pi;
constexpr double kEulerGamma = 0.57721566490153286060651209;

// Kress weights R_d for the logarithmic quadrature
//   int_0^{2pi} f(tau) ln(4 sin^2((t_i - tau)/2)) dtau
//     ~= sum_j R_{|i-j|} f(t_j),
// N = 2n nodes t_j = pi j / n.
std::vector<double> kress_weights(std::size_t N) {
  const std::size_t n = N / 2;
  std::vector<double> R(N);
  for (std::size_t d = 0; d < N; ++d) {
    const double td = kPi * static_cast<double>(d) / static_cast<double>(n);
    double acc = 0.0;
    for (std::size_t m = 1; m < n; ++m)
      acc += std::cos(static_cast<double>(m) * td) / static_cast<double>(m);
    R[d] = -(2.0 * kPi / static_cast<double>(n)) * acc -
           (kPi / (static_cast<double>(n) * static_cast<double>(n))) *
               std::cos(static_cast<double>(n) * td);
  }
  return R;
}

double log4sin2(double dt) {
  const double s = 2.0 * std::sin(0.5 * dt);
  return std::log(s * s);
}

using EMat = Eigen::MatrixXcd;
using EVec = Eigen::VectorXcd;

EMat to_eigen(const CMatrix& m) {
  EMat e(m.n, m.n);
  for (std::size_t i = 0; i < m.n; ++i)
    for (std::size_t j = 0; j < m.n; ++j) e(i, j) = m.at(i, j);
  return e;
}

EVec to_eigen(const BoundaryField& f) {
  EVec v(f.size());
  for (std::size_t j = 0; j < f.size(); ++j) v(j) = f[j];
  return v;
}

BoundaryField from_eigen(const EVec& v) {
  BoundaryField f(static_cast<std::size_t>(v.size()));
  for (Eigen::Index j = 0; j < v.size(); ++j)
    f[static_cast<std::size_t>(j)] = v(j);
  return f;
}

struct Workspace {
  EMat S, K, Kp, T;
};

Workspace assemble(const StarCurve& c, double kappa) {
  const std::size_t N = c.size();
  const std::vector<double> R = kress_weights(N);
  const double w = 2.0 * kPi / static_cast<double>(N);  // smooth-part weight

  EMat S(N, N), K(N, N), Kp(N, N), Stilde(N, N), Snn(N, N);
  for (std::size_t i = 0; i < N; ++i) {
    const Vec2 xi = c.position(i);
    const Vec2 ni = c.normal(i);
    const double spi = c.speed(i);
    for (std::size_t j = 0; j < N; ++j) {
      const double spj = c.speed(j);
      if (i == j) {
        const Complex diag_log =
            Complex(0.25, 0.0) * kI - kEulerGamma / (2.0 * kPi) -
            std::log(kappa * spi / 2.0) / (2.0 * kPi);
        // A = A1 * ln(4 sin^2) + A2; diagonal entries get R_0 A1 + w A2.
        S(i, j) = R[0] * (-1.0 / (4.0 * kPi) * spi) + w * diag_log * spi;
        Stilde(i, j) = R[0] * (-1.0 / (4.0 * kPi)) + w * diag_log;
        Snn(i, j) = S(i, j);
        const Complex kdiag = -c.curvature(i) * spi / (4.0 * kPi);
        K(i, j) = w * kdiag;
        Kp(i, j) = w * kdiag;
        continue;
      }
      const Vec2 xj = c.position(j);
      const Vec2 nj = c.normal(j);
      const Vec2 d{xi.x - xj.x, xi.y - xj.y};
      const double r = d.norm();
      const double lg = log4sin2(c.node(i) - c.node(j));
      const double j0 = bessel_j(0, kappa * r);
      const double j1r = bessel_j(1, kappa * r) / r;
      const Complex h0 = hankel1(0, kappa * r);
      const Complex h1r = hankel1(1, kappa * r) / r;

      {  // single layer
        const Complex full = Complex(0.25, 0.0) * kI * h0 * spj;
        const Complex a1 = -j0 * spj / (4.0 * kPi);
        S(i, j) = R[(i > j) ? i - j : j - i] * a1 + w * (full - a1 * lg);
        Stilde(i, j) = S(i, j) / spj;
        Snn(i, j) = S(i, j) * dot(ni, nj);
      }
      {  // double layer (PV), kernel dPhi/dn(y) |x'(tau)|
        const double br = d.x * nj.x + d.y * nj.y;
        const Complex full = (kI * kappa / 4.0) * h1r * br * spj;
        const Complex a1 = -(kappa / (4.0 * kPi)) * j1r * br * spj;
        K(i, j) = R[(i > j) ? i - j : j - i] * a1 + w * (full - a1 * lg);
      }
      {  // adjoint double layer (PV), kernel dPhi/dn(x) |x'(tau)|
        const double br = d.x * ni.x + d.y * ni.y;
        const Complex full = -(kI * kappa / 4.0) * h1r * br * spj;
        const Complex a1 = (kappa / (4.0 * kPi)) * j1r * br * spj;
        Kp(i, j) = R[(i > j) ? i - j : j - i] * a1 + w * (full - a1 * lg);
      }
    }
  }

  // Maue: T = diag(1/|x'|) D Stilde D + kappa^2 Snn.
  const CMatrix Dm = spectral_diff_matrix(N);
  const EMat D = to_eigen(Dm);
  EMat T = D * Stilde * D;
  for (std::size_t i = 0; i < N; ++i) T.row(i) /= c.speed(i);
  T += kappa * kappa * Snn;

  return Workspace{std::move(S), std::move(K), std::move(Kp), std::move(T)};
}

struct IncidentTraces {
  BoundaryField lambda, sigma;
};

IncidentTraces incident_traces(const PlaneWave& w, double kappa,
                               const StarCurve& c) {
  IncidentTraces tr{BoundaryField(c.size()), BoundaryField(c.size())};
  const Vec2 d = w.dir();
  for (std::size_t j = 0; j < c.size(); ++j) {
    const Complex u = std::exp(kI * (kappa * dot(d, c.position(j))));
    tr.lambda[j] = u;
    tr.sigma[j] = kI * kappa * dot(d, c.normal(j)) * u;
  }
  return tr;
}

struct SolveOutput {
  BoundaryField density;
  BoundaryField lambda_sc, sigma_sc;  // traces of the represented part
  double condition = 0.0;
};

SolveOutput solve_on(const StarCurve& curve, reg::ProblemKind beta,
                     const WaveParameters& params, double coupling,
                     const BoundaryField& rhs) {
  const std::size_t N = curve.size();
  const Workspace ws = assemble(curve, params.kappa);
  const Complex ia = kI * coupling;

  EMat A;
  switch (beta) {
    case reg::ProblemKind::Dirichlet:
      A = ws.K + ia * ws.S;
      A.diagonal().array() += 0.5;
      break;
    case reg::ProblemKind::Neumann:
      A = ws.T + ia * ws.Kp;
      A.diagonal().array() -= ia * 0.5;
      break;
    case reg::ProblemKind::Impedance: {
      const Complex ie = kI * params.eta;
      A = ws.T + ia * ws.Kp + ie * (ws.K + ia * ws.S);
      A.diagonal().array() += -ia * 0.5 + ie * 0.5;
      break;
    }
    default:
      throw NotSupported("BIE backend covers beta in {0,1,2} only");
  }

  Eigen::PartialPivLU<EMat> lu(A);
  SolveOutput out;
  const double rc = lu.rcond();
  out.condition = rc > 0.0 ? 1.0 / rc : 1e300;
  if (out.condition > 1e12)
    throw IllConditioned("BIE system condition estimate " +
                         std::to_string(out.condition) + " exceeds 1e12");

  const EVec phi = lu.solve(to_eigen(rhs));
  out.density = from_eigen(phi);

  EVec lam = ws.K * phi + ia * (ws.S * phi) + 0.5 * phi;
  EVec sig = ws.T * phi + ia * (ws.Kp * phi) - ia * 0.5 * phi;
  out.lambda_sc = from_eigen(lam);
  out.sigma_sc = from_eigen(sig);
  (void)N;
  return out;
}

BoundaryField scattering_rhs(reg::ProblemKind beta,
                             const WaveParameters& params,
                             const IncidentTraces& inc) {
  switch (beta) {
    case reg::ProblemKind::Dirichlet:
      return Complex(-1.0, 0.0) * inc.lambda;
    case reg::ProblemKind::Neumann:
      return Complex(-1.0, 0.0) * inc.sigma;
    case reg::ProblemKind::Impedance: {
      BoundaryField g = inc.sigma;
      g += kI * params.eta * inc.lambda;
      return Complex(-1.0, 0.0) * g;
    }
    default:
      throw NotSupported("BIE backend covers beta in {0,1,2} only");
  }
}

double coupling_for(reg::ProblemKind beta, double kappa) {
  return beta == reg::ProblemKind::Dirichlet ? -kappa : kappa;
}

double trace_diff_at_common_nodes(const BoundaryField& coarse,
                                  const BoundaryField& fine) {
  double m = 0.0;
  for (std::size_t j = 0; j < coarse.size(); ++j)
    m = std::max(m, std::abs(coarse[j] - fine[2 * j]));
  return m;
}

}  // namespace

CMatrix spectral_diff_matrix(std::size_t N) {
  CMatrix D(N);
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) {
      if (i == j) continue;
      const double t = (static_cast<double>(i) - static_cast<double>(j)) *
                       2.0 * kPi / static_cast<double>(N);
      const double sgn = ((i + j) % 2 == 0) ? 1.0 : -1.0;
      D.at(i, j) = 0.5 * sgn / std::tan(0.5 * t);
    }
  return D;
}

BoundaryOperators assemble_operators(const StarCurve& curve, double kappa) {
  const Workspace ws = assemble(curve, kappa);
  const std::size_t N = curve.size();
  BoundaryOperators ops{CMatrix(N), CMatrix(N), CMatrix(N), CMatrix(N)};
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) {
      ops.S.at(i, j) = ws.S(i, j);
      ops.K.at(i, j) = ws.K(i, j);
      ops.Kp.at(i, j) = ws.Kp(i, j);
      ops.T.at(i, j) = ws.T(i, j);
    }
  return ops;
}

FieldEval BIESolution::eval(Vec2 x, FieldPart part) const {
  if (part == FieldPart::Interior)
    throw WrongRegion("BIE backend has no interior field");
  FieldEval e;
  const double kappa = params.kappa;
  if (part != FieldPart::Incident) {
    double dist = 1e300;
    for (std::size_t j = 0; j < curve.size(); ++j)
      dist = std::min(dist, (x - curve.position(j)).norm());
    if (dist < collar_width)
      throw NearBoundaryEvaluation(
          "evaluation point within the collar (width " +
          std::to_string(collar_width) + ")");

    const double w = 2.0 * kPi / static_cast<double>(curve.size());
    const Complex ia = kI * coupling;
    for (std::size_t j = 0; j < curve.size(); ++j) {
      const Vec2 y = curve.position(j);
      const Vec2 n = curve.normal(j);
      const double sp = curve.speed(j);
      const Vec2 d = x - y;
      const double r = d.norm();
      const Complex h0 = hankel1(0, kappa * r);
      const Complex h1 = hankel1(1, kappa * r);
      const Complex h1p = hankel1_prime(1, kappa * r);

      // SL kernel Phi and its x-gradient.
      const Complex sl = Complex(0.25, 0.0) * kI * h0;
      const Complex slr = -(kI * kappa / 4.0) * h1;  // dPhi/dr
      // DL kernel psi(r) ((x-y).n_y) with psi = (i kappa/4) H1(kappa r)/r.
      const Complex psi = (kI * kappa / 4.0) * h1 / r;
      const Complex dpsi =
          (kI * kappa / 4.0) * (kappa * h1p * r - h1) / (r * r);
      const double brn = dot(d, n);

      const Complex phi_j = density[j] * w * sp;
      e.u += (psi * brn + ia * sl) * phi_j;
      const Vec2 rhat{d.x / r, d.y / r};
      e.grad.x += (dpsi * rhat.x * brn + psi * n.x + ia * slr * rhat.x) * phi_j;
      e.grad.y += (dpsi * rhat.y * brn + psi * n.y + ia * slr * rhat.y) * phi_j;
    }
  }
  if ((part == FieldPart::Total || part == FieldPart::Incident) &&
      has_incident) {
    const Vec2 dir = incident.dir();
    const Complex u = std::exp(kI * (kappa * dot(dir, x)));
    if (part == FieldPart::Incident) {
      e.u = u;
      e.grad = {kI * kappa * dir.x * u, kI * kappa * dir.y * u};
    } else {
      e.u += u;
      e.grad.x += kI * kappa * dir.x * u;
      e.grad.y += kI * kappa * dir.y * u;
    }
  }
  return e;
}

namespace {

BIESolution finish_solution(const StarCurve& curve, reg::ProblemKind beta,
                            const WaveParameters& params, double coupling,
                            const SolveOutput& out, bool with_incident,
                            const PlaneWave& incident) {
  BIESolution sol;
  sol.curve = curve;
  sol.beta = beta;
  sol.params = params;
  sol.density = out.density;
  sol.coupling = coupling;
  sol.has_incident = with_incident;
  sol.incident = incident;
  sol.condition_estimate = out.condition;
  sol.collar_width = 6.0 * curve.length() / static_cast<double>(curve.size());

  BoundaryField lambda = out.lambda_sc;
  BoundaryField sigma = out.sigma_sc;
  if (with_incident) {
    const IncidentTraces inc = incident_traces(incident, params.kappa, curve);
    lambda += inc.lambda;
    sigma += inc.sigma;
  }
  TraceBundle tb{CauchyData{lambda, sigma}, BoundaryField(curve.size()), false,
                 BoundaryField()};
  tb.gamma2 = gamma2_from_surface(lambda, sigma, params.kappa, curve);
  sol.set_traces(std::move(tb));
  return sol;
}

}  // namespace

BIESolution bie_solve(reg::ProblemKind beta, const StarCurve& curve,
                      const WaveParameters& params, const PlaneWave& incident,
                      bool certify) {
  params.validate(beta);
  const double coupling = coupling_for(beta, params.kappa);
  const IncidentTraces inc = incident_traces(incident, params.kappa, curve);
  const BoundaryField rhs = scattering_rhs(beta, params, inc);
  const SolveOutput out = solve_on(curve, beta, params, coupling, rhs);
  BIESolution sol =
      finish_solution(curve, beta, params, coupling, out, true, incident);

  if (certify) {
    const StarCurve fine =
        StarCurve::make(curve.radius_coefficients(), 2 * curve.size());
    const IncidentTraces inc2 = incident_traces(incident, params.kappa, fine);
    const SolveOutput out2 = solve_on(fine, beta, params, coupling,
                                      scattering_rhs(beta, params, inc2));
    BIESolution fine_sol =
        finish_solution(fine, beta, params, coupling, out2, true, incident);
    sol.self_convergence = std::max(
        trace_diff_at_common_nodes(sol.traces().xi.lambda,
                                   fine_sol.traces().xi.lambda),
        trace_diff_at_common_nodes(sol.traces().xi.sigma,
                                   fine_sol.traces().xi.sigma));
    if (sol.self_convergence > 1e-9)
      throw UnderResolved("self-convergence certificate " +
                          std::to_string(sol.self_convergence) +
                          " exceeds 1e-9; raise N");
  }
  return sol;
}

BIESolution bie_radiating(reg::ProblemKind beta, const StarCurve& curve,
                          const WaveParameters& params, const BoundaryField& g,
                          bool certify) {
  params.validate(beta);
  const double coupling = coupling_for(beta, params.kappa);
  const SolveOutput out = solve_on(curve, beta, params, coupling, g);
  BIESolution sol =
      finish_solution(curve, beta, params, coupling, out, false, PlaneWave{});

  if (certify) {
    const StarCurve fine =
        StarCurve::make(curve.radius_coefficients(), 2 * curve.size());
    const SolveOutput out2 =
        solve_on(fine, beta, params, coupling, resample(g, 2 * g.size()));
    BIESolution fine_sol =
        finish_solution(fine, beta, params, coupling, out2, false, PlaneWave{});
    sol.self_convergence = std::max(
        trace_diff_at_common_nodes(sol.traces().xi.lambda,
                                   fine_sol.traces().xi.lambda),
        trace_diff_at_common_nodes(sol.traces().xi.sigma,
                                   fine_sol.traces().xi.sigma));
    if (sol.self_convergence > 1e-9)
      throw UnderResolved("self-convergence certificate " +
                          std::to_string(sol.self_convergence) +
                          " exceeds 1e-9; raise N");
  }
  return sol;
}

}  // namespace helmsens
