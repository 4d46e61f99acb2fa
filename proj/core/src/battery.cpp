#include "helmsens/battery.hpp"

#include <chrono>
#include <cmath>
#include <cstdint>

#include "helmsens/json_io.hpp"

namespace helmsens {

namespace {

// ---------------------------------------------------------------------------
// Criterion 1 oracle: a second, literal transcription of the index formulas,
// in plain doubles, deliberately sharing no code with the regularity engine.
// ---------------------------------------------------------------------------

double dmin2(double a, double b) { return a < b ? a : b; }
double dmin3(double a, double b, double c) { return dmin2(dmin2(a, b), c); }

struct OracleRow {
  double sol, comp, uncomp, md, sd, mdat, f, m, gd, gn;
};

OracleRow oracle_row(double r, double q, double k, int beta, bool sharp) {
  OracleRow o;
  o.sol = sharp ? dmin2(q, r + 0.5) : q;
  o.comp = dmin2(q, k);
  o.uncomp = sharp ? dmin2(q, k + 0.5) : dmin2(q, k);
  o.md = beta == 0 ? dmin2(q, k) : dmin3(q, r - 0.5, k);
  o.sd = sharp ? dmin3(q - 1.0, r - 0.5, k + 0.5) : dmin2(q - 1.0, k + 0.5);
  o.mdat = dmin3(q, r - 0.5, k + 0.5);
  o.f = dmin2(q, k) - 1.0;
  o.m = o.mdat - 0.5;
  o.gd = o.sd + 0.5;
  o.gn = o.sd - 0.5;
  return o;
}

bool same(const SobolevIndex& s, double v) {
  return !s.is_infinite() && s.twice() == std::llround(2.0 * v);
}

CriterionResult criterion_regularity_grid() {
  using namespace reg;
  CriterionResult res{"regularity-grid", false, {}, {}};
  const auto start = std::chrono::steady_clock::now();
  long long checked = 0, mismatches = 0;
  for (int r = 1; r <= 6; ++r) {
    for (int q2 = 0; q2 <= 13; ++q2) {
      for (int k = 0; k <= r; ++k) {
        for (int beta = 0; beta <= 3; ++beta) {
          for (int mode = 0; mode < 2; ++mode) {
            const bool sharp = mode == 1;
            const double q = 0.5 * q2;
            RegularityQuery query;
            query.r = SobolevIndex::integer(r);
            query.q = SobolevIndex::half(q2);
            query.k = SobolevIndex::integer(k);
            query.beta = static_cast<ProblemKind>(beta);
            query.mode = sharp ? ShiftMode::Sharp : ShiftMode::Classic;
            ++checked;

            const bool base_valid = sharp || q <= static_cast<double>(r);
            const bool md_valid = base_valid && q >= 1.0 && k >= 1;
            const OracleRow o = oracle_row(r, q, k, beta, sharp);

            bool row_ok = true;
            try {
              const SobolevIndex sol = solution_index(query);
              const PerturbedIndices pert = perturbed_index(query);
              const SobolevIndex sd = sd_index(query);
              if (!base_valid) row_ok = false;
              row_ok = row_ok && same(sol, o.sol) && same(pert.composed, o.comp) &&
                       same(pert.uncomposed, o.uncomp) && same(sd, o.sd);
            } catch (const Error&) {
              if (base_valid) row_ok = false;
            }
            try {
              const SobolevIndex md = md_index(query);
              const SobolevIndex mdat = md_datum_index(query);
              const DatumIndices data = datum_indices(query);
              const CauchyIndices cauchy = cauchy_indices(query);
              if (!md_valid) row_ok = false;
              row_ok = row_ok && same(md, o.md) && same(mdat, o.mdat) &&
                       same(data.f, o.f) && same(data.m, o.m) &&
                       same(data.g_dirichlet, o.gd) &&
                       same(data.g_neumann, o.gn) && same(cauchy.cmd, o.md) &&
                       same(cauchy.csd, o.sd);
            } catch (const Error&) {
              if (md_valid) row_ok = false;
            }
            if (!row_ok) ++mismatches;
          }
        }
      }
    }
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  res.metrics.emplace_back("checked", static_cast<double>(checked));
  res.metrics.emplace_back("mismatches", static_cast<double>(mismatches));
  // wall time stays out of the metrics so identical runs serialize to
  // identical bytes; the budget verdict is what matters
  res.metrics.emplace_back("under_1s", seconds < 1.0 ? 1.0 : 0.0);
  res.pass = mismatches == 0 && seconds < 1.0;
  return res;
}

CriterionResult criterion_spot_values() {
  using namespace reg;
  CriterionResult res{"regularity-spot", false, {}, {}};
  RegularityQuery a;
  a.r = SobolevIndex::integer(3);
  a.q = SobolevIndex::integer(2);
  a.k = SobolevIndex::integer(1);
  a.beta = ProblemKind::Neumann;
  const bool md_ok = md_index(a) == SobolevIndex::integer(1);

  RegularityQuery b;
  b.r = SobolevIndex::integer(2);
  b.q = SobolevIndex::integer(2);
  b.k = SobolevIndex::integer(1);
  const bool sd_ok = sd_index(b) == SobolevIndex::integer(1);

  RegularityQuery c;
  c.r = SobolevIndex::integer(1);
  c.q = SobolevIndex::integer(3);
  c.k = SobolevIndex::integer(1);
  c.mode = ShiftMode::Sharp;
  const bool sol_ok = solution_index(c) == SobolevIndex::half(3);

  res.metrics.emplace_back("md_r3_q2_k1_beta1", md_ok ? 1.0 : 0.0);
  res.metrics.emplace_back("sd_r2_q2_k1", sd_ok ? 1.0 : 0.0);
  res.metrics.emplace_back("sol_r1_q3_sharp", sol_ok ? 1.0 : 0.0);
  res.pass = md_ok && sd_ok && sol_ok;
  return res;
}

// ---------------------------------------------------------------------------
// Shared solver configuration.
// ---------------------------------------------------------------------------

struct Grid {
  std::size_t N;
  std::vector<double> ts;
  std::size_t n_radial, n_angular;
};

Grid grid_for(bool quick) {
  Grid g;
  if (quick) {
    g.N = 128;
    g.ts = {1e-2, std::pow(10.0, -2.5), 1e-3};
    g.n_radial = 4;
    g.n_angular = 16;
  } else {
    g.N = 256;
    for (double e = -1.5; e > -3.75; e -= 0.5) g.ts.push_back(std::pow(10.0, e));
    g.n_radial = 6;
    g.n_angular = 32;
  }
  return g;
}

WaveParameters base_params() {
  WaveParameters p;
  p.kappa = 2.0;
  p.eta = 1.0;
  p.kappa1 = 3.0;
  p.mu0 = 1.0;
  p.mu1 = 1.5;
  return p;
}

ProblemSpec make_spec(reg::ProblemKind beta, bool flower, const Grid& g) {
  ProblemSpec s;
  s.beta = beta;
  s.params = base_params();
  s.incident.angle = 0.3;
  s.N = g.N;
  if (flower)
    s.radius_coefficients = {Complex(1.0, 0.0), Complex(0.0, 0.0),
                             Complex(0.1, 0.0)};
  s.backend = flower ? Backend::Nystrom : Backend::Series;
  return s;
}

VelocityField translation() { return VelocityField::constant({0.4, -0.25}); }

// Normal-aligned boundary field g(phi) = 1 + 0.3 cos phi extended radially
// with slope 1/2 at the circle; used where the datum formulas assume the
// canonical extension.
VelocityField radial_normal_field() {
  const std::vector<Complex> vx = {Complex(0.15, 0.0), Complex(0.5, 0.0),
                                   Complex(0.075, 0.0)};
  const std::vector<Complex> vy = {Complex(0.0, 0.0), Complex(0.0, -0.5),
                                   Complex(0.0, -0.075)};
  return VelocityField::radial_blend(vx, vy, 0.6, 1.0, 1.8, 0.5);
}

TaylorStudy make_study(const ProblemSpec& spec, const VelocityField& v,
                       StudyTarget target, const Grid& g) {
  TaylorStudy st;
  st.problem = spec;
  st.velocity = v;
  st.target = target;
  st.ts = g.ts;
  st.n_radial = g.n_radial;
  st.n_angular = g.n_angular;
  return st;
}

struct LadderCase {
  std::string label;
  TaylorStudy study;
  double min_slope = 1.9;
  double max_slope = 1e9;
  std::vector<std::string> covers;
};

void run_ladders(CriterionResult& res, const std::vector<LadderCase>& cases,
                 std::vector<CoverageEntry>& coverage) {
  bool all = true;
  for (const LadderCase& lc : cases) {
    double slope = 0.0;
    bool ok = false;
    try {
      const StudyReport rep = taylor_study(lc.study);
      slope = rep.slope;
      ok = !rep.degenerate && slope >= lc.min_slope && slope <= lc.max_slope;
    } catch (const Error& e) {
      res.note += lc.label + ": " + e.what() + "; ";
    }
    res.metrics.emplace_back(lc.label, slope);
    all = all && ok;
    if (ok) {
      for (const std::string& f : lc.covers) {
        for (CoverageEntry& ce : coverage) {
          if (ce.formula == f) {
            ce.covered = true;
            ce.covered_by.push_back(res.name + "/" + lc.label);
          }
        }
      }
    }
  }
  res.pass = all;
}

std::string beta_tag(reg::ProblemKind beta) {
  return "b" + std::to_string(static_cast<int>(beta));
}

CriterionResult criterion_solver_fidelity(const Grid& g) {
  CriterionResult res{"solver-fidelity", false, {}, {}};
  const auto start = std::chrono::steady_clock::now();
  bool all = true;
  for (int b = 0; b <= 2; ++b) {
    const auto beta = static_cast<reg::ProblemKind>(b);
    const ProblemSpec spec = make_spec(beta, false, g);
    try {
      const CrossCheckReport rep = cross_backend_check(spec);
      res.metrics.emplace_back("trace_" + beta_tag(beta), rep.trace_diff);
      res.metrics.emplace_back("field_" + beta_tag(beta), rep.field_diff);
      res.metrics.emplace_back("bc_series_" + beta_tag(beta),
                               rep.bc_residual_series);
      res.metrics.emplace_back("bc_nystrom_" + beta_tag(beta),
                               rep.bc_residual_nystrom);
      all = all && rep.bc_residual_series <= 1e-9 &&
            rep.bc_residual_nystrom <= 1e-9;
      if (b == 0) all = all && rep.trace_diff <= 1e-8 && rep.field_diff <= 1e-8;
    } catch (const Error& e) {
      res.note += std::string(e.what()) + "; ";
      all = false;
    }
  }
  try {
    const WaveParameters p = base_params();
    const SeriesSolution tr =
        mie_solve(reg::ProblemKind::Transmission, p, PlaneWave{0.3}, 1.0);
    const double mode_res = transmission_mode_residual(tr, g.N);
    res.metrics.emplace_back("transmission_mode", mode_res);
    all = all && mode_res <= 1e-12;
  } catch (const Error& e) {
    res.note += std::string(e.what()) + "; ";
    all = false;
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  res.metrics.emplace_back("under_30s", seconds < 30.0 ? 1.0 : 0.0);
  res.pass = all && seconds < 30.0;
  return res;
}

CriterionResult criterion_md_taylor(const Grid& g, bool quick,
                                    std::vector<CoverageEntry>& coverage) {
  CriterionResult res{"md-taylor", false, {}, {}};
  std::vector<LadderCase> cases;
  for (int b = 0; b <= 2; ++b) {
    const auto beta = static_cast<reg::ProblemKind>(b);
    for (int flower = 0; flower <= 1; ++flower) {
      for (int trans = 0; trans <= 1; ++trans) {
        if (quick && !(b == 0 && flower == trans)) continue;
        const ProblemSpec spec = make_spec(beta, flower, g);
        const VelocityField v =
            trans ? translation() : VelocityField::dilation();
        const std::string tag = beta_tag(beta) +
                                (flower ? "_flower" : "_disc") +
                                (trans ? "_trans" : "_dil");
        cases.push_back({"vol_" + tag,
                         make_study(spec, v, StudyTarget::VolumeMd, g), 1.9,
                         1e9, {"lie"}});
        cases.push_back({"cmd_" + tag,
                         make_study(spec, v, StudyTarget::CauchyMd, g), 1.9,
                         1e9, {"cmd"}});
      }
    }
    // CSD ladders ride along here: same machinery, covers the CSD formula
    if (!quick || b == 0) {
      const ProblemSpec spec = make_spec(beta, false, g);
      cases.push_back({"csd_" + beta_tag(beta) + "_disc_dil",
                       make_study(spec, VelocityField::dilation(),
                                  StudyTarget::CauchySd, g),
                       1.9, 1e9, {"csd"}});
    }
  }
  run_ladders(res, cases, coverage);
  return res;
}

CriterionResult criterion_sd_taylor(const Grid& g, bool quick,
                                    std::vector<CoverageEntry>& coverage) {
  CriterionResult res{"sd-taylor", false, {}, {}};
  std::vector<LadderCase> cases;
  const std::string gdata[3] = {"g0", "g1", "g2"};
  for (int b = 0; b <= 2; ++b) {
    const auto beta = static_cast<reg::ProblemKind>(b);
    for (int flower = 0; flower <= 1; ++flower) {
      for (int trans = 0; trans <= 1; ++trans) {
        if (quick && !(b == 0 && flower == trans)) continue;
        const ProblemSpec spec = make_spec(beta, flower, g);
        const VelocityField v =
            trans ? translation() : VelocityField::dilation();
        const std::string tag = beta_tag(beta) +
                                (flower ? "_flower" : "_disc") +
                                (trans ? "_trans" : "_dil");
        cases.push_back({"sd_" + tag,
                         make_study(spec, v, StudyTarget::VolumeSd, g), 1.9,
                         1e9, {gdata[b]}});
      }
    }
  }
  // transmission enters through the disc dilation (series backend)
  cases.push_back({"sd_b3_disc_dil",
                   make_study(make_spec(reg::ProblemKind::Transmission, false,
                                        g),
                              VelocityField::dilation(), StudyTarget::VolumeSd,
                              g),
                   1.9, 1e9, {"g3"}});
  run_ladders(res, cases, coverage);
  return res;
}

CriterionResult criterion_stability(const Grid& g, bool quick,
                                    std::vector<CoverageEntry>& coverage) {
  CriterionResult res{"stability", false, {}, {}};
  std::vector<LadderCase> cases;
  const ProblemSpec disc0 = make_spec(reg::ProblemKind::Dirichlet, false, g);
  cases.push_back({"vol_b0_disc_dil",
                   make_study(disc0, VelocityField::dilation(),
                              StudyTarget::Stability, g),
                   0.95, 1.05, {}});
  cases.push_back({"xi_b0_disc_dil",
                   make_study(disc0, VelocityField::dilation(),
                              StudyTarget::CauchyStability, g),
                   0.95, 1.05, {}});
  if (!quick) {
    const ProblemSpec fl1 = make_spec(reg::ProblemKind::Neumann, true, g);
    cases.push_back({"vol_b1_flower_trans",
                     make_study(fl1, translation(), StudyTarget::Stability, g),
                     0.95, 1.05, {}});
    cases.push_back({"xi_b1_flower_trans",
                     make_study(fl1, translation(),
                                StudyTarget::CauchyStability, g),
                     0.95, 1.05, {}});
  }
  run_ladders(res, cases, coverage);
  return res;
}

CriterionResult criterion_structure(const Grid& g, bool quick,
                                    std::vector<CoverageEntry>& coverage) {
  CriterionResult res{"structure", false, {}, {}};
  bool all = true;

  try {
    const ProblemSpec spec = make_spec(reg::ProblemKind::Dirichlet, false, g);
    const std::vector<Complex> vx = {Complex(0.0, 0.0), Complex(0.5, 0.0)};
    const std::vector<Complex> vy = {Complex(0.0, 0.0), Complex(0.0, -0.5)};
    const VelocityField unit_normal =
        VelocityField::radial_blend(vx, vy, 0.5, 1.0, 1.6, 0.3);
    const HadamardReport h =
        hadamard_check(spec, VelocityField::dilation(), unit_normal);
    res.metrics.emplace_back("hadamard_field", h.field_diff);
    res.metrics.emplace_back("hadamard_trace", h.trace_diff);
    const bool ok = h.field_diff <= 1e-7 && h.trace_diff <= 1e-7;
    all = all && ok;
    if (ok) {
      for (CoverageEntry& ce : coverage)
        if (ce.formula == "hadamard") {
          ce.covered = true;
          ce.covered_by.push_back("structure/hadamard");
        }
    }
  } catch (const Error& e) {
    res.note += std::string("hadamard: ") + e.what() + "; ";
    all = false;
  }

  struct CldCase {
    std::string label;
    ProblemSpec spec;
    VelocityField v;
  };
  std::vector<CldCase> clds;
  clds.push_back({"cld_b1_disc_trans",
                  make_spec(reg::ProblemKind::Neumann, false, g),
                  translation()});
  if (!quick)
    clds.push_back({"cld_b2_flower_dil",
                    make_spec(reg::ProblemKind::Impedance, true, g),
                    VelocityField::dilation()});
  for (const CldCase& cc : clds) {
    try {
      const double r = cld_residual(cc.spec, cc.v, CmdVariant::Generalized);
      res.metrics.emplace_back(cc.label, r);
      all = all && r <= 1e-7;
    } catch (const Error& e) {
      res.note += cc.label + ": " + e.what() + "; ";
      all = false;
    }
  }

  try {
    const ProblemSpec spec = make_spec(reg::ProblemKind::Dirichlet, false, g);
    std::vector<LadderCase> lie_case;
    lie_case.push_back({"lie_b0_disc_dil",
                        make_study(spec, VelocityField::dilation(),
                                   StudyTarget::LieFd, g),
                        0.9, 1e9, {"lie"}});
    CriterionResult sub{"structure", false, {}, {}};
    run_ladders(sub, lie_case, coverage);
    res.metrics.insert(res.metrics.end(), sub.metrics.begin(),
                       sub.metrics.end());
    res.note += sub.note;
    all = all && sub.pass;
  } catch (const Error& e) {
    res.note += std::string("lie: ") + e.what() + "; ";
    all = false;
  }

  try {
    const double l0 = vanishing_sd_component(
        make_spec(reg::ProblemKind::Dirichlet, false, g), translation());
    res.metrics.emplace_back("lambda_prime_b0", l0);
    all = all && l0 <= 1e-7;
    const double s1 = vanishing_sd_component(
        make_spec(reg::ProblemKind::Neumann, false, g), translation());
    res.metrics.emplace_back("sigma_prime_b1", s1);
    all = all && s1 <= 1e-7;
  } catch (const Error& e) {
    res.note += std::string("vanishing: ") + e.what() + "; ";
    all = false;
  }

  try {
    const double t = tangential_sd_max(
        make_spec(reg::ProblemKind::Impedance, false, g),
        VelocityField::rotation());
    res.metrics.emplace_back("tangential_b2", t);
    all = all && t <= 1e-8;
  } catch (const Error& e) {
    res.note += std::string("tangential: ") + e.what() + "; ";
    all = false;
  }

  res.pass = all;
  return res;
}

CriterionResult criterion_mp_residual(const Grid& g,
                                      std::vector<CoverageEntry>& coverage) {
  CriterionResult res{"mp-residual", false, {}, {}};
  bool all = true;
  const VelocityField v = radial_normal_field();
  const std::string mdata[3] = {"m0", "m1", "m2"};
  for (int b = 0; b <= 2; ++b) {
    const auto beta = static_cast<reg::ProblemKind>(b);
    try {
      const ProblemSpec spec = make_spec(beta, false, g);
      const MpReport rep =
          mp_residual_check(spec, v, MdReading::GradVn, 1.4, 1e-3);
      res.metrics.emplace_back("pde_" + beta_tag(beta), rep.pde_residual);
      res.metrics.emplace_back("bc_" + beta_tag(beta), rep.bc_residual);
      const bool ok = rep.pde_residual <= 1e-6 && rep.bc_residual <= 1e-7;
      all = all && ok;
      if (ok) {
        for (CoverageEntry& ce : coverage)
          if (ce.formula == mdata[b] || ce.formula == "f") {
            ce.covered = true;
            ce.covered_by.push_back("mp-residual/" + beta_tag(beta));
          }
      }
      if (b == 1) {
        res.metrics.emplace_back("bc_b1_alt_reading", rep.bc_residual_alt);
        const bool one_reading =
            rep.bc_residual <= 1e-7 && rep.bc_residual_alt > 1e-7;
        res.metrics.emplace_back("one_passing_reading",
                                 one_reading ? 1.0 : 0.0);
        all = all && one_reading;
      }
    } catch (const Error& e) {
      res.note += beta_tag(beta) + ": " + e.what() + "; ";
      all = false;
    }
  }

  // Transmission boundary datum, checked on both jump conditions with the
  // per-side Lie-derived traces. Feeds the m3 coverage entry.
  try {
    const WaveParameters p = base_params();
    const SeriesSolution U =
        mie_solve(reg::ProblemKind::Transmission, p, PlaneWave{0.3}, 1.0);
    const StarCurve disc = StarCurve::disc(1.0, g.N);
    const TraceBundle tb = U.traces(g.N);
    const BoundaryVelocity bv = sample_on(v, disc);
    const std::vector<VelocityJet> jets = jets_on(v, disc);
    const SeriesSolution Up = solve_sd_mie(U, v);
    const TraceBundle tbp = Up.traces(g.N);

    TraceBundle ext = tb;
    ext.has_interior = false;
    CauchyData sd_ext = tbp.xi;
    const CauchyData md_ext = md_field_traces(disc, ext, sd_ext, bv, jets);

    TraceBundle in;
    in.xi.lambda = tb.xi.lambda_in;
    in.xi.sigma = tb.xi.sigma_in;
    in.gamma2 = tb.gamma2_in;
    CauchyData sd_in;
    sd_in.lambda = tbp.xi.lambda_in;
    sd_in.sigma = tbp.xi.sigma_in;
    const CauchyData md_in = md_field_traces(disc, in, sd_in, bv, jets);

    const MdData m = md_boundary_data(reg::ProblemKind::Transmission, disc, tb,
                                      bv, jets, p);
    double r0 = 0.0, r1 = 0.0;
    for (std::size_t j = 0; j < g.N; ++j) {
      r0 = std::max(r0, std::abs(md_ext.lambda[j] - md_in.lambda[j] -
                                 m.m0[j]));
      r1 = std::max(r1, std::abs(md_ext.sigma[j] / p.mu0 -
                                 md_in.sigma[j] / p.mu1 - m.m1[j]));
    }
    res.metrics.emplace_back("bc_b3_jump0", r0);
    res.metrics.emplace_back("bc_b3_jump1", r1);
    const bool ok3 = r0 <= 1e-7 && r1 <= 1e-7;
    if (ok3) {
      for (CoverageEntry& ce : coverage)
        if (ce.formula == "m3") {
          ce.covered = true;
          ce.covered_by.push_back("mp-residual/b3");
        }
    }
    // the b3 jump check is supplementary; it feeds coverage, not pass/fail
  } catch (const Error& e) {
    res.note += std::string("b3: ") + e.what() + "; ";
  }

  res.pass = all;
  return res;
}

}  // namespace

BatteryReport run_acceptance_battery(bool quick) {
  BatteryReport rep;
  rep.quick = quick;
  for (const char* f : {"f", "m0", "m1", "m2", "m3", "g0", "g1", "g2", "g3",
                        "cmd", "csd", "lie", "hadamard"})
    rep.coverage.push_back({f, {}, false});

  const Grid g = grid_for(quick);
  rep.criteria.push_back(criterion_regularity_grid());
  rep.criteria.push_back(criterion_spot_values());
  rep.criteria.push_back(criterion_solver_fidelity(g));
  rep.criteria.push_back(criterion_md_taylor(g, quick, rep.coverage));
  rep.criteria.push_back(criterion_sd_taylor(g, quick, rep.coverage));
  rep.criteria.push_back(criterion_stability(g, quick, rep.coverage));
  rep.criteria.push_back(criterion_structure(g, quick, rep.coverage));
  rep.criteria.push_back(criterion_mp_residual(g, rep.coverage));
  return rep;
}

std::string battery_json(const BatteryReport& rep) {
  jsonio::Writer w;
  w.begin_object();
  w.key("schema").value(1);
  w.key("quick").value(rep.quick);
  w.key("pass").value(rep.all_pass());
  w.key("criteria").begin_array();
  for (const CriterionResult& c : rep.criteria) {
    w.begin_object();
    w.key("name").value(c.name);
    w.key("pass").value(c.pass);
    w.key("metrics").begin_object();
    for (const auto& [k, v] : c.metrics) w.key(k).value(v);
    w.end_object();
    if (!c.note.empty()) w.key("note").value(c.note);
    w.end_object();
  }
  w.end_array();
  w.key("coverage").begin_array();
  for (const CoverageEntry& ce : rep.coverage) {
    w.begin_object();
    w.key("formula").value(ce.formula);
    w.key("covered").value(ce.covered);
    w.key("covered_by").begin_array();
    for (const std::string& s : ce.covered_by) w.value(s);
    w.end_array();
    w.end_object();
  }
  w.end_array();
  w.end_object();
  return w.str();
}

}  // namespace helmsens
