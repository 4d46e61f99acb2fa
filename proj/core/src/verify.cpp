#include "helmsens/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <future>
#include <memory>
#include <optional>

namespace helmsens {

namespace {

constexpr double kNoiseFloor = 1e-14;

struct Base {
  ProblemSpec spec;
  StarCurve curve;
  std::optional<SeriesSolution> mie;
  std::optional<BIESolution> bie;
  TraceBundle tb;

  FieldEval at(Vec2 x) const {
    return mie ? mie->eval(x, FieldPart::Total)
               : bie->eval(x, FieldPart::Total);
  }
};

double disc_radius(const ProblemSpec& s) {
  if (s.radius_coefficients.size() != 1 ||
      s.radius_coefficients[0].imag() != 0.0)
    throw NotSupported("series backend needs a centered disc");
  return s.radius_coefficients[0].real();
}

Base solve_base(const ProblemSpec& s) {
  Base b;
  b.spec = s;
  b.curve = s.curve();
  if (s.backend == Backend::Series) {
    b.mie = mie_solve(s.beta, s.params, s.incident, disc_radius(s));
    b.tb = b.mie->traces(s.N);
  } else {
    b.bie = bie_solve(s.beta, b.curve, s.params, s.incident);
    b.tb = b.bie->traces();
  }
  return b;
}

struct SdSolved {
  std::optional<SeriesSolution> mie;
  std::optional<BIESolution> bie;
  CauchyData xi;

  Complex at(Vec2 x) const {
    return mie ? mie->eval(x, FieldPart::Total).u
               : bie->eval(x, FieldPart::Total).u;
  }
};

SdSolved solve_sd(const Base& b, const VelocityField& v) {
  SdSolved s;
  if (b.mie) {
    s.mie = solve_sd_mie(*b.mie, v);
    s.xi = s.mie->traces(b.curve.size()).xi;
  } else {
    s.bie = solve_sd_bie(*b.bie, v);
    s.xi = s.bie->traces().xi;
  }
  return s;
}

// Solution on the flowed domain, exposed as a field evaluator plus the
// boundary traces pulled back through T_t to the base nodes.
struct Perturbed {
  std::function<Complex(Vec2)> value;
  CauchyData pullback;
};

Perturbed solve_perturbed(const Base& b, const VelocityField& v, double t) {
  const StarCurve& c = b.curve;
  const std::size_t N = c.size();
  Perturbed p;
  p.pullback = CauchyData{BoundaryField(N), BoundaryField(N)};

  if (b.bie) {
    const StarCurve ct = transform_curve(c, v, t);
    auto sol = std::make_shared<BIESolution>(
        bie_solve(b.spec.beta, ct, b.spec.params, b.spec.incident));
    p.value = [sol](Vec2 x) { return sol->eval(x, FieldPart::Total).u; };
    const TraceBundle tt = sol->traces();
    for (std::size_t j = 0; j < N; ++j) {
      const Vec2 x = c.position(j);
      const Vec2 w = v.eval(x);
      const Vec2 y{x.x + t * w.x, x.y + t * w.y};
      const double theta = std::atan2(y.y, y.x);
      p.pullback.lambda[j] = tt.xi.lambda.interp(theta);
      p.pullback.sigma[j] = tt.xi.sigma.interp(theta);
    }
    return p;
  }

  switch (v.kind()) {
    case VelocityKind::Dilation: {
      auto sol = std::make_shared<SeriesSolution>(mie_solve(
          b.spec.beta, b.spec.params, b.spec.incident, b.mie->a * (1.0 + t)));
      p.value = [sol](Vec2 x) { return sol->eval(x, FieldPart::Total).u; };
      p.pullback = sol->traces(N).xi;  // dilation keeps the node angles
      return p;
    }
    case VelocityKind::Constant: {
      // Shifting the obstacle by t*c shifts the scattered field and applies
      // the incident phase picked up at the new center.
      const Vec2 shift = v.eval({0.0, 0.0});
      const Vec2 d = b.spec.incident.dir();
      const double kappa = b.spec.params.kappa;
      const Complex phase =
          std::exp(Complex(0.0, kappa * t * (d.x * shift.x + d.y * shift.y)));
      const SeriesSolution base = *b.mie;
      const double ts = t;
      p.value = [base, phase, shift, ts](Vec2 x) {
        const Vec2 xs{x.x - ts * shift.x, x.y - ts * shift.y};
        return base.eval(x, FieldPart::Incident).u +
               phase * base.eval(xs, FieldPart::Scattered).u;
      };
      for (std::size_t j = 0; j < N; ++j) {
        const Vec2 x = c.position(j);
        const Vec2 y{x.x + t * shift.x, x.y + t * shift.y};
        const Vec2 n = c.normal(j);
        const FieldEval inc = base.eval(y, FieldPart::Incident);
        const FieldEval sc = base.eval(x, FieldPart::Scattered);
        p.pullback.lambda[j] = inc.u + phase * sc.u;
        p.pullback.sigma[j] = inc.grad.x * n.x + inc.grad.y * n.y +
                              phase * (sc.grad.x * n.x + sc.grad.y * n.y);
      }
      return p;
    }
    default:
      throw NotSupported(
          "series backend flows only the dilation and translation families");
  }
}

std::vector<Vec2> eval_ring(double radius, std::size_t n) {
  std::vector<Vec2> pts;
  pts.reserve(n);
  const double two_pi = 2.0 * std::acos(-1.0);
  for (std::size_t k = 0; k < n; ++k) {
    // offset keeps the points off symmetry axes of the test configurations
    const double a = two_pi * (static_cast<double>(k) + 0.37) /
                     static_cast<double>(n);
    pts.push_back({radius * std::cos(a), radius * std::sin(a)});
  }
  return pts;
}

std::vector<double> default_ladder() {
  std::vector<double> ts;
  for (double e = -1.5; e > -3.75; e -= 0.5) ts.push_back(std::pow(10.0, e));
  return ts;
}

}  // namespace

double fit_slope(const std::vector<double>& ts,
                 const std::vector<double>& remainders) {
  std::vector<std::pair<double, double>> pts;  // (log t, log r)
  double tmax = 0.0;
  std::size_t imax = 0;
  for (std::size_t i = 0; i < ts.size(); ++i) {
    if (ts[i] > tmax) {
      tmax = ts[i];
      imax = i;
    }
  }
  for (std::size_t i = 0; i < ts.size(); ++i) {
    if (i == imax) continue;  // preasymptotic rung
    if (remainders[i] <= kNoiseFloor) continue;
    pts.emplace_back(std::log(ts[i]), std::log(remainders[i]));
  }
  if (pts.size() < 2)
    throw SlopeUnstable("too few Taylor rungs above the noise floor");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (auto [x, y] : pts) {
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double n = static_cast<double>(pts.size());
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

namespace {

std::size_t ladder_threads() {
  const char* env = std::getenv("HELMSENS_THREADS");
  if (!env) return 1;
  const long n = std::strtol(env, nullptr, 10);
  return n > 1 ? static_cast<std::size_t>(n) : 1;
}

// HH^0 surrogate norm of a trace pair: H^{1/2} x H^{-1/2}.
double pair_norm(const StarCurve& c, const BoundaryField& lam,
                 const BoundaryField& sig) {
  const double a = c.sobolev_norm(lam, 0.5);
  const double b = c.sobolev_norm(sig, -0.5);
  return std::sqrt(a * a + b * b);
}

}  // namespace

StudyReport taylor_study(const TaylorStudy& st) {
  Base b = solve_base(st.problem);
  const StarCurve& c = b.curve;
  StudyReport rep;
  rep.ts = st.ts.empty() ? default_ladder() : st.ts;
  double tmax = 0.0;
  for (double t : rep.ts) tmax = std::max(tmax, t);

  const bool volume_target = st.target == StudyTarget::VolumeSd ||
                             st.target == StudyTarget::VolumeMd ||
                             st.target == StudyTarget::LieFd ||
                             st.target == StudyTarget::Stability;

  const bool stability = st.target == StudyTarget::Stability ||
                         st.target == StudyTarget::CauchyStability;
  std::optional<SdSolved> sd;
  if (!stability) sd = solve_sd(b, st.velocity);

  std::function<double(double)> remainder_at;
  VolumeGrid grid;

  if (volume_target) {
    Annulus region = st.region;
    if (region.r1 <= region.r0) {
      region.r0 = 1.6 * c.rho_max();
      region.r1 = 2.2 * c.rho_max();
    }
    grid = make_annulus_grid(region, st.n_radial, st.n_angular);
    // clearance from every flowed boundary plus the evaluation collar
    double vmax = 0.0;
    for (std::size_t j = 0; j < c.size(); ++j)
      vmax = std::max(vmax, st.velocity.eval(c.position(j)).norm());
    double margin = 2.0 * tmax * vmax;
    if (b.bie) margin += b.bie->collar_width;
    require_region_clear(region, c, margin);

    const std::size_t P = grid.points.size();
    auto u0 = std::make_shared<std::vector<Complex>>(P);
    auto deriv = std::make_shared<std::vector<Complex>>(P);
    auto flow = std::make_shared<std::vector<Vec2>>(P);
    double ref = 0.0;
    for (std::size_t k = 0; k < P; ++k) {
      const FieldEval e = b.at(grid.points[k]);
      (*u0)[k] = e.u;
      (*flow)[k] = st.velocity.eval(grid.points[k]);
      Complex d = 0.0;
      if (st.target == StudyTarget::VolumeSd) {
        d = sd->at(grid.points[k]);
      } else if (!stability) {
        d = sd->at(grid.points[k]) + e.grad.x * (*flow)[k].x +
            e.grad.y * (*flow)[k].y;
      }
      (*deriv)[k] = d;
      ref += grid.weights[k] * std::norm(d);
    }
    rep.reference_scale = std::sqrt(ref);

    const bool pulled = st.target == StudyTarget::VolumeMd ||
                        st.target == StudyTarget::LieFd ||
                        st.target == StudyTarget::Stability;
    const StudyTarget target = st.target;
    remainder_at = [b, st, grid, u0, deriv, flow, pulled,
                    target](double t) {
      const Perturbed pert = solve_perturbed(b, st.velocity, t);
      double acc = 0.0;
      for (std::size_t k = 0; k < grid.points.size(); ++k) {
        Vec2 x = grid.points[k];
        if (pulled) x = {x.x + t * (*flow)[k].x, x.y + t * (*flow)[k].y};
        const Complex r = pert.value(x) - (*u0)[k] - t * (*deriv)[k];
        acc += grid.weights[k] * std::norm(r);
      }
      double out = std::sqrt(acc);
      if (target == StudyTarget::LieFd) out /= t;
      return out;
    };
  } else {
    const BoundaryVelocity bv = sample_on(st.velocity, c);
    const std::vector<VelocityJet> jets = jets_on(st.velocity, c);
    auto deriv = std::make_shared<CauchyData>();
    if (st.target == StudyTarget::CauchyStability) {
      deriv->lambda = BoundaryField(c.size());
      deriv->sigma = BoundaryField(c.size());
    } else if (st.target == StudyTarget::CauchyMd) {
      const CauchyData md_tr = md_field_traces(c, b.tb, sd->xi, bv, jets);
      *deriv = cauchy_md(c, b.tb, md_tr, bv, jets, st.reading, st.variant);
    } else {
      const CauchyData xi_prime = cauchy_sd(c, b.tb, sd->xi, bv);
      *deriv = boundary_lie(c, b.tb.xi, xi_prime, bv);
    }
    rep.reference_scale = pair_norm(c, deriv->lambda, deriv->sigma);
    remainder_at = [b, st, deriv](double t) {
      const Perturbed pert = solve_perturbed(b, st.velocity, t);
      const StarCurve& cc = b.curve;
      BoundaryField rlam(cc.size()), rsig(cc.size());
      for (std::size_t j = 0; j < cc.size(); ++j) {
        rlam[j] = pert.pullback.lambda[j] - b.tb.xi.lambda[j] -
                  t * deriv->lambda[j];
        rsig[j] = pert.pullback.sigma[j] - b.tb.xi.sigma[j] -
                  t * deriv->sigma[j];
      }
      return pair_norm(cc, rlam, rsig);
    };
  }

  rep.remainders.resize(rep.ts.size());
  const std::size_t threads = ladder_threads();
  if (threads <= 1 || rep.ts.size() <= 1) {
    for (std::size_t i = 0; i < rep.ts.size(); ++i)
      rep.remainders[i] = remainder_at(rep.ts[i]);
  } else {
    std::vector<std::future<double>> futs;
    futs.reserve(rep.ts.size());
    for (double t : rep.ts)
      futs.push_back(std::async(std::launch::async, remainder_at, t));
    for (std::size_t i = 0; i < futs.size(); ++i)
      rep.remainders[i] = futs[i].get();
  }

  const double floor = kNoiseFloor * std::max(1.0, rep.reference_scale);
  double rmax = 0.0;
  for (double r : rep.remainders) rmax = std::max(rmax, r);
  if (rmax <= floor) {
    rep.degenerate = true;
    return rep;
  }
  rep.slope = fit_slope(rep.ts, rep.remainders);
  return rep;
}

HadamardReport hadamard_check(const ProblemSpec& spec, const VelocityField& v1,
                              const VelocityField& v2, double eval_radius) {
  Base b = solve_base(spec);
  const BoundaryVelocity b1 = sample_on(v1, b.curve);
  const BoundaryVelocity b2 = sample_on(v2, b.curve);
  HadamardReport rep;
  rep.vn_mismatch = (b1.vn - b2.vn).max_abs();
  const double scale = std::max({b1.vn.max_abs(), b2.vn.max_abs(), 1e-30});
  if (rep.vn_mismatch > 1e-10 * scale)
    throw NormalMismatch("extensions have different normal traces");
  const SdSolved s1 = solve_sd(b, v1);
  const SdSolved s2 = solve_sd(b, v2);
  rep.trace_diff = std::max((s1.xi.lambda - s2.xi.lambda).max_abs(),
                            (s1.xi.sigma - s2.xi.sigma).max_abs());
  const double radius =
      eval_radius > 0.0 ? eval_radius : 2.0 * b.curve.rho_max();
  for (const Vec2& x : eval_ring(radius, 12))
    rep.field_diff =
        std::max(rep.field_diff, std::abs(s1.at(x) - s2.at(x)));
  return rep;
}

double cld_residual(const ProblemSpec& spec, const VelocityField& v,
                    CmdVariant variant) {
  Base b = solve_base(spec);
  const StarCurve& c = b.curve;
  const BoundaryVelocity bv = sample_on(v, c);
  const std::vector<VelocityJet> jets = jets_on(v, c);
  const SdSolved sd = solve_sd(b, v);
  const CauchyData md_tr = md_field_traces(c, b.tb, sd.xi, bv, jets);
  const CauchyData xi_dot =
      cauchy_md(c, b.tb, md_tr, bv, jets, MdReading::GradVn, variant);
  const CauchyData xi_prime = cauchy_sd(c, b.tb, sd.xi, bv);
  const CauchyData lie = boundary_lie(c, b.tb.xi, xi_prime, bv);
  double worst = 0.0;
  worst = std::max(worst, (xi_dot.lambda - lie.lambda).max_abs());
  worst = std::max(worst, (xi_dot.sigma - lie.sigma).max_abs());
  return worst;
}

double vanishing_sd_component(const ProblemSpec& spec, const VelocityField& v) {
  Base b = solve_base(spec);
  const BoundaryVelocity bv = sample_on(v, b.curve);
  const SdSolved sd = solve_sd(b, v);
  const CauchyData xi_prime = cauchy_sd(b.curve, b.tb, sd.xi, bv);
  switch (spec.beta) {
    case reg::ProblemKind::Dirichlet:
      return xi_prime.lambda.max_abs();
    case reg::ProblemKind::Neumann:
      return xi_prime.sigma.max_abs();
    default:
      throw NotSupported("vanishing component exists for beta = 0, 1 only");
  }
}

double tangential_sd_max(const ProblemSpec& spec, const VelocityField& v,
                         double eval_radius) {
  Base b = solve_base(spec);
  const BoundaryVelocity bv = sample_on(v, b.curve);
  const double vscale = std::max(
      {bv.vn.max_abs(), bv.vtau.max_abs(), 1e-30});
  if (bv.vn.max_abs() > 1e-10 * vscale)
    throw NormalMismatch("velocity is not tangential on the boundary");
  const SdSolved sd = solve_sd(b, v);
  double worst = std::max(sd.xi.lambda.max_abs(), sd.xi.sigma.max_abs());
  const double radius =
      eval_radius > 0.0 ? eval_radius : 2.0 * b.curve.rho_max();
  for (const Vec2& x : eval_ring(radius, 12))
    worst = std::max(worst, std::abs(sd.at(x)));
  return worst;
}

MpReport mp_residual_check(const ProblemSpec& spec, const VelocityField& v,
                           MdReading reading, double eval_radius,
                           double stencil_h) {
  Base b = solve_base(spec);
  if (!b.mie)
    throw NotSupported("MP residuals need the series backend (Hessians)");
  const StarCurve& c = b.curve;
  const SdSolved sd = solve_sd(b, v);
  const double kappa2 = spec.params.kappa * spec.params.kappa;

  auto udot = [&](Vec2 x) {
    const FieldEval e = b.mie->eval(x, FieldPart::Total);
    const Vec2 w = v.eval(x);
    return sd.at(x) + e.grad.x * w.x + e.grad.y * w.y;
  };

  MpReport rep;
  rep.stencil_h = stencil_h;
  const double radius =
      eval_radius > 0.0 ? eval_radius : 2.0 * c.rho_max();
  const double h = stencil_h;
  for (const Vec2& x : eval_ring(radius, 8)) {
    const Complex center = udot(x);
    // fourth-order 9-point Laplacian; second order can't reach the 1e-6
    // target before roundoff takes over
    auto second = [&](Vec2 e) {
      return (-udot({x.x + 2 * h * e.x, x.y + 2 * h * e.y}) +
              16.0 * udot({x.x + h * e.x, x.y + h * e.y}) - 30.0 * center +
              16.0 * udot({x.x - h * e.x, x.y - h * e.y}) -
              udot({x.x - 2 * h * e.x, x.y - 2 * h * e.y})) /
             (12.0 * h * h);
    };
    const Complex lap = second({1.0, 0.0}) + second({0.0, 1.0});
    const Complex f = md_volume_source(*b.mie, v, x);
    rep.pde_residual =
        std::max(rep.pde_residual, std::abs(lap + kappa2 * center + f));
  }

  const BoundaryVelocity bv = sample_on(v, c);
  const std::vector<VelocityJet> jets = jets_on(v, c);
  const CauchyData md_tr = md_field_traces(c, b.tb, sd.xi, bv, jets);
  const MdReading alt = reading == MdReading::GradVn ? MdReading::GradVTn
                                                     : MdReading::GradVn;
  auto bc_residual = [&](MdReading r) {
    const MdData m =
        md_boundary_data(spec.beta, c, b.tb, bv, jets, spec.params, r);
    double worst = 0.0;
    for (std::size_t j = 0; j < c.size(); ++j) {
      Complex res;
      switch (spec.beta) {
        case reg::ProblemKind::Dirichlet:
          res = md_tr.lambda[j] - m.m[j];
          break;
        case reg::ProblemKind::Neumann:
          res = md_tr.sigma[j] - m.m[j];
          break;
        case reg::ProblemKind::Impedance:
          res = md_tr.sigma[j] +
                Complex(0.0, spec.params.eta) * md_tr.lambda[j] - m.m[j];
          break;
        default:
          throw NotSupported("MP boundary residual covers beta = 0, 1, 2");
      }
      worst = std::max(worst, std::abs(res));
    }
    return worst;
  };
  rep.bc_residual = bc_residual(reading);
  rep.bc_residual_alt = bc_residual(alt);
  return rep;
}

CrossCheckReport cross_backend_check(const ProblemSpec& spec) {
  if (spec.beta == reg::ProblemKind::Transmission)
    throw NotSupported("transmission is series-backend only");
  const double a = disc_radius(spec);
  const StarCurve curve = spec.curve();
  const SeriesSolution mie =
      mie_solve(spec.beta, spec.params, spec.incident, a);
  const BIESolution bie =
      bie_solve(spec.beta, curve, spec.params, spec.incident);
  const TraceBundle ts = mie.traces(spec.N);
  const TraceBundle tn = bie.traces();

  CrossCheckReport rep;
  rep.trace_diff = std::max((ts.xi.lambda - tn.xi.lambda).max_abs(),
                            (ts.xi.sigma - tn.xi.sigma).max_abs());
  for (const Vec2& x : eval_ring(2.0 * a, 16))
    rep.field_diff = std::max(
        rep.field_diff, std::abs(mie.eval(x, FieldPart::Total).u -
                                 bie.eval(x, FieldPart::Total).u));

  auto bc = [&](const TraceBundle& tb) {
    double worst = 0.0;
    for (std::size_t j = 0; j < spec.N; ++j) {
      Complex res;
      switch (spec.beta) {
        case reg::ProblemKind::Dirichlet:
          res = tb.xi.lambda[j];
          break;
        case reg::ProblemKind::Neumann:
          res = tb.xi.sigma[j];
          break;
        default:
          res = tb.xi.sigma[j] + Complex(0.0, spec.params.eta) * tb.xi.lambda[j];
          break;
      }
      worst = std::max(worst, std::abs(res));
    }
    return worst;
  };
  rep.bc_residual_series = bc(ts);
  rep.bc_residual_nystrom = bc(tn);
  return rep;
}

double transmission_mode_residual(const SeriesSolution& sol, std::size_t N) {
  const TraceBundle tb = sol.traces(N);
  if (!tb.has_interior)
    throw MissingExtras("not a transmission solution");
  BoundaryField j0 = tb.xi.lambda - tb.xi.lambda_in;
  BoundaryField j1(N);
  for (std::size_t j = 0; j < N; ++j)
    j1[j] = tb.xi.sigma[j] / sol.params.mu0 -
            tb.xi.sigma_in[j] / sol.params.mu1;
  const double scale =
      std::max({tb.xi.lambda.max_abs(), tb.xi.sigma.max_abs(), 1e-30});
  double worst = 0.0;
  for (const Complex& z : j0.hat()) worst = std::max(worst, std::abs(z));
  for (const Complex& z : j1.hat()) worst = std::max(worst, std::abs(z));
  return worst / scale;
}

}  // namespace helmsens
