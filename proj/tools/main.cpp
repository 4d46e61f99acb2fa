// helmsens command-line front end: regularity calculator plus the numerical
// verification bench. Exit codes: 0 pass, 1 check failure, 2 usage error.

#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "helmsens/battery.hpp"
#include "helmsens/json_io.hpp"

using namespace helmsens;

namespace {

const char* kVersion = "1.0.0";

std::vector<double> parse_reals(const std::string& s) {
  std::vector<double> out;
  std::size_t pos = 0;
  while (pos < s.size()) {
    std::size_t next = s.find(',', pos);
    if (next == std::string::npos) next = s.size();
    const std::string tok = s.substr(pos, next - pos);
    try {
      std::size_t used = 0;
      out.push_back(std::stod(tok, &used));
      if (used != tok.size()) throw ParseError("trailing characters");
    } catch (const std::exception&) {
      throw ParseError("cannot parse real number '" + tok + "' in '" + s + "'");
    }
    pos = next + 1;
  }
  if (out.empty()) throw ParseError("empty number list '" + s + "'");
  return out;
}

std::vector<Complex> pairs_to_complex(const std::vector<double>& flat,
                                      const std::string& what) {
  if (flat.size() % 2 != 0)
    throw ParseError(what + " wants flat re,im pairs, got " +
                     std::to_string(flat.size()) + " numbers");
  std::vector<Complex> out;
  for (std::size_t i = 0; i < flat.size(); i += 2)
    out.emplace_back(flat[i], flat[i + 1]);
  return out;
}

// Velocity grammar:
//   dilation | rotation
//   translation:cx,cy
//   radial:r0,rc,r1,slope:<vx re,im pairs>:<vy re,im pairs>
VelocityField parse_velocity(const std::string& spec) {
  if (spec == "dilation") return VelocityField::dilation();
  if (spec == "rotation") return VelocityField::rotation();
  if (spec.rfind("translation:", 0) == 0) {
    const auto c = parse_reals(spec.substr(12));
    if (c.size() != 2)
      throw ParseError("translation wants cx,cy in '" + spec + "'");
    return VelocityField::constant({c[0], c[1]});
  }
  if (spec.rfind("radial:", 0) == 0) {
    const std::string rest = spec.substr(7);
    const std::size_t c1 = rest.find(':');
    const std::size_t c2 = c1 == std::string::npos ? c1 : rest.find(':', c1 + 1);
    if (c2 == std::string::npos)
      throw ParseError("radial wants r0,rc,r1,slope:vx:vy in '" + spec + "'");
    const auto geom = parse_reals(rest.substr(0, c1));
    if (geom.size() != 4)
      throw ParseError("radial wants r0,rc,r1,slope before the profiles");
    const auto vx = pairs_to_complex(
        parse_reals(rest.substr(c1 + 1, c2 - c1 - 1)), "vx profile");
    const auto vy =
        pairs_to_complex(parse_reals(rest.substr(c2 + 1)), "vy profile");
    return VelocityField::radial_blend(vx, vy, geom[0], geom[1], geom[2],
                                       geom[3]);
  }
  throw ParseError("unknown velocity spec '" + spec + "'");
}

SobolevIndex parse_index(const std::string& s, const std::string& name) {
  try {
    if (s.find('.') != std::string::npos) {
      const double v = std::stod(s);
      const double tw = 2.0 * v;
      if (tw != static_cast<double>(static_cast<long long>(tw)))
        throw ParseError("not a half-integer");
      return SobolevIndex::half(static_cast<long long>(tw));
    }
    return SobolevIndex::parse(s);
  } catch (const Error&) {
    throw ParseError("cannot parse half-integer " + name + " = '" + s + "'");
  }
}

struct ProblemOpts {
  int beta = 0;
  double kappa = 2.0, eta = 1.0, kappa1 = 1.0, mu0 = 1.0, mu1 = 1.0;
  double angle = 0.0;
  std::string rho = "1";
  std::size_t N = 256;
  std::string backend = "series";

  ProblemSpec build() const {
    if (beta < 0 || beta > 3)
      throw ParseError("beta must lie in {0, 1, 2, 3}, got " +
                       std::to_string(beta));
    ProblemSpec s;
    s.beta = static_cast<reg::ProblemKind>(beta);
    s.params.kappa = kappa;
    s.params.eta = eta;
    s.params.kappa1 = kappa1;
    s.params.mu0 = mu0;
    s.params.mu1 = mu1;
    s.params.validate(s.beta);
    s.incident.angle = angle;
    s.radius_coefficients.clear();
    for (double c : parse_reals(rho)) s.radius_coefficients.emplace_back(c, 0.0);
    s.N = N;
    if (backend == "series")
      s.backend = Backend::Series;
    else if (backend == "nystrom")
      s.backend = Backend::Nystrom;
    else
      throw ParseError("backend must be series or nystrom, got '" + backend +
                       "'");
    return s;
  }
};

void add_problem_opts(CLI::App* cmd, ProblemOpts& o) {
  cmd->add_option("--beta", o.beta, "problem family 0..3");
  cmd->add_option("--kappa", o.kappa, "exterior wavenumber");
  cmd->add_option("--eta", o.eta, "impedance coefficient");
  cmd->add_option("--kappa1", o.kappa1, "interior wavenumber (beta 3)");
  cmd->add_option("--mu0", o.mu0, "exterior mu (beta 3)");
  cmd->add_option("--mu1", o.mu1, "interior mu (beta 3)");
  cmd->add_option("--angle", o.angle, "incident plane-wave angle");
  cmd->add_option("--rho", o.rho,
                  "radius coefficients c0,c1,... (rho = sum 2 Re c_n e^{in phi}"
                  " beyond c0)");
  cmd->add_option("--N", o.N, "boundary nodes (power of two)");
  cmd->add_option("--backend", o.backend, "series | nystrom");
}

long long g_seed = 0;

std::string provenance_json(const std::string& command) {
  jsonio::Writer w;
  w.begin_object();
  w.key("tool").value("helmsens");
  w.key("version").value(kVersion);
  w.key("command").value(command);
  w.key("seed").value(g_seed);
  const char* th = std::getenv("HELMSENS_THREADS");
  w.key("threads").value(th ? th : "1");
  w.end_object();
  return w.str();
}

void emit(const std::string& command, const std::string& body) {
  std::string out = "{\"schema\":1,\"provenance\":";
  out += provenance_json(command);
  out += ",\"report\":";
  out += body;
  out += "}\n";
  std::fputs(out.c_str(), stdout);
}

void write_pair(jsonio::Writer& w, const CauchyData& xi) {
  w.begin_object();
  w.key("lambda");
  jsonio::write_field(w, xi.lambda);
  w.key("sigma");
  jsonio::write_field(w, xi.sigma);
  if (xi.has_interior) {
    w.key("lambda_in");
    jsonio::write_field(w, xi.lambda_in);
    w.key("sigma_in");
    jsonio::write_field(w, xi.sigma_in);
  }
  w.end_object();
}

// Base solve shared by solve/derive.
struct Solved {
  ProblemSpec spec;
  StarCurve curve;
  TraceBundle tb;
  double condition = 0.0;
};

Solved solve_base(const ProblemOpts& po) {
  Solved s;
  s.spec = po.build();
  s.curve = s.spec.curve();
  if (s.spec.backend == Backend::Series) {
    if (s.spec.radius_coefficients.size() != 1)
      throw NotSupported("series backend requires a centered disc");
    const SeriesSolution sol =
        mie_solve(s.spec.beta, s.spec.params, s.spec.incident,
                  s.spec.radius_coefficients[0].real());
    s.tb = sol.traces(s.spec.N);
    s.condition = sol.max_mode_condition;
  } else {
    if (s.spec.beta == reg::ProblemKind::Transmission)
      throw NotSupported("nystrom backend does not cover transmission");
    const BIESolution sol =
        bie_solve(s.spec.beta, s.curve, s.spec.params, s.spec.incident);
    s.tb = sol.traces();
    s.condition = sol.condition_estimate;
  }
  return s;
}

int cmd_regularity(const std::string& r, const std::string& q,
                   const std::string& k, int beta, const std::string& mode,
                   const std::string& format) {
  reg::RegularityQuery query;
  query.r = parse_index(r, "r");
  query.q = parse_index(q, "q");
  query.k = parse_index(k, "k");
  if (beta < 0 || beta > 3)
    throw ParseError("beta must lie in {0, 1, 2, 3}, got " +
                     std::to_string(beta));
  query.beta = static_cast<reg::ProblemKind>(beta);
  if (mode == "classic")
    query.mode = reg::ShiftMode::Classic;
  else if (mode == "sharp")
    query.mode = reg::ShiftMode::Sharp;
  else
    throw ParseError("mode must be classic or sharp, got '" + mode + "'");

  const reg::RegularityReport rep = reg::full_report(query);
  if (format == "table") {
    std::printf("solution   %-6s %s\n", rep.solution.index.str().c_str(),
                rep.solution.rendered.c_str());
    std::printf("perturbed  composed %s, uncomposed %s\n",
                rep.perturbed.composed.str().c_str(),
                rep.perturbed.uncomposed.str().c_str());
    std::printf("md         %-6s %s\n", rep.md.index.str().c_str(),
                rep.md.rendered.c_str());
    std::printf("sd         %-6s %s\n", rep.sd.index.str().c_str(),
                rep.sd.rendered.c_str());
    std::printf("data       f %s, m %s, g_d %s, g_n %s\n",
                rep.data.f.str().c_str(), rep.data.m.str().c_str(),
                rep.data.g_dirichlet.str().c_str(),
                rep.data.g_neumann.str().c_str());
    std::printf("cauchy     md %s %s\n", rep.cauchy.cmd.str().c_str(),
                rep.cauchy_md_space.rendered.c_str());
    std::printf("           sd %s %s\n", rep.cauchy.csd.str().c_str(),
                rep.cauchy_sd_space.rendered.c_str());
    return 0;
  }
  if (format != "json")
    throw ParseError("format must be json or table, got '" + format + "'");
  jsonio::Writer w;
  jsonio::write_regularity(w, rep);
  emit("regularity", w.str());
  return 0;
}

int cmd_solve(const ProblemOpts& po) {
  const Solved s = solve_base(po);
  jsonio::Writer w;
  w.begin_object();
  w.key("beta").value(static_cast<int>(s.spec.beta));
  w.key("backend").value(s.spec.backend == Backend::Series ? "series"
                                                           : "nystrom");
  w.key("curve");
  jsonio::write_curve(w, s.curve);
  w.key("condition").value(s.condition);
  w.key("traces");
  write_pair(w, s.tb.xi);
  w.key("gamma2");
  jsonio::write_field(w, s.tb.gamma2);
  w.end_object();
  emit("solve", w.str());
  return 0;
}

int cmd_derive(const ProblemOpts& po, const std::string& vspec,
               const std::string& reading_s, const std::string& variant_s) {
  const VelocityField v = parse_velocity(vspec);
  const MdReading reading =
      reading_s == "gradvtn" ? MdReading::GradVTn : MdReading::GradVn;
  const CmdVariant variant =
      variant_s == "normal-aligned" ? CmdVariant::NormalAligned : CmdVariant::Generalized;
  const Solved s = solve_base(po);
  const BoundaryVelocity bv = sample_on(v, s.curve);
  const std::vector<VelocityJet> jets = jets_on(v, s.curve);
  const SdData g = sd_boundary_data(s.spec.beta, s.curve, s.tb, bv,
                                    s.spec.params);
  const MdData m = md_boundary_data(s.spec.beta, s.curve, s.tb, bv, jets,
                                    s.spec.params, reading);

  jsonio::Writer w;
  w.begin_object();
  w.key("beta").value(static_cast<int>(s.spec.beta));
  w.key("velocity").value(v.describe());
  if (g.pair) {
    w.key("g0");
    jsonio::write_field(w, g.g0);
    w.key("g1");
    jsonio::write_field(w, g.g1);
    w.key("m0");
    jsonio::write_field(w, m.m0);
    w.key("m1");
    jsonio::write_field(w, m.m1);
  } else {
    w.key("g");
    jsonio::write_field(w, g.g);
    w.key("m");
    jsonio::write_field(w, m.m);
  }
  if (!g.pair) {
    // derivative Cauchy pairs need the SD solve; series backend only
    if (s.spec.backend == Backend::Series) {
      const SeriesSolution base =
          mie_solve(s.spec.beta, s.spec.params, s.spec.incident,
                    s.spec.radius_coefficients[0].real());
      const SeriesSolution sd = solve_sd_mie(base, v);
      const CauchyData sd_tr = sd.traces(s.spec.N).xi;
      const CauchyData md_tr = md_field_traces(s.curve, s.tb, sd_tr, bv, jets);
      w.key("cauchy_md");
      write_pair(w, cauchy_md(s.curve, s.tb, md_tr, bv, jets, reading,
                              variant));
      w.key("cauchy_sd");
      write_pair(w, cauchy_sd(s.curve, s.tb, sd_tr, bv));
    }
  }
  w.end_object();
  emit("derive", w.str());
  return 0;
}

int cmd_taylor(const ProblemOpts& po, const std::string& vspec,
               const std::string& target_s, const std::string& ts_s,
               const std::string& variant_s, const std::string& format,
               double min_slope, double max_slope) {
  TaylorStudy st;
  st.problem = po.build();
  st.velocity = parse_velocity(vspec);
  st.variant = variant_s == "normal-aligned" ? CmdVariant::NormalAligned : CmdVariant::Generalized;
  double lo = 1.9, hi = 1e9;
  if (target_s == "volume-sd")
    st.target = StudyTarget::VolumeSd;
  else if (target_s == "volume-md")
    st.target = StudyTarget::VolumeMd;
  else if (target_s == "lie-fd") {
    st.target = StudyTarget::LieFd;
    lo = 0.9;
  } else if (target_s == "cauchy-md")
    st.target = StudyTarget::CauchyMd;
  else if (target_s == "cauchy-sd")
    st.target = StudyTarget::CauchySd;
  else if (target_s == "stability") {
    st.target = StudyTarget::Stability;
    lo = 0.95;
    hi = 1.05;
  } else if (target_s == "cauchy-stability") {
    st.target = StudyTarget::CauchyStability;
    lo = 0.95;
    hi = 1.05;
  } else
    throw ParseError("unknown taylor target '" + target_s + "'");
  if (min_slope > -1e8) lo = min_slope;
  if (max_slope < 1e8) hi = max_slope;
  if (!ts_s.empty()) st.ts = parse_reals(ts_s);

  const StudyReport rep = taylor_study(st);
  if (format == "csv") {
    std::fputs(jsonio::study_csv(rep).c_str(), stdout);
  } else if (format == "json") {
    jsonio::Writer w;
    jsonio::write_study(w, rep);
    emit("taylor", w.str());
  } else {
    throw ParseError("format must be json or csv, got '" + format + "'");
  }
  const bool pass = !rep.degenerate && rep.slope >= lo && rep.slope <= hi;
  return pass ? 0 : 1;
}

int cmd_hadamard(const ProblemOpts& po, const std::string& v1s,
                 const std::string& v2s, double tol) {
  const ProblemSpec spec = po.build();
  const HadamardReport rep =
      hadamard_check(spec, parse_velocity(v1s), parse_velocity(v2s));
  jsonio::Writer w;
  w.begin_object();
  w.key("vn_mismatch").value(rep.vn_mismatch);
  w.key("field_diff").value(rep.field_diff);
  w.key("trace_diff").value(rep.trace_diff);
  w.key("tol").value(tol);
  w.end_object();
  emit("hadamard", w.str());
  return (rep.field_diff <= tol && rep.trace_diff <= tol) ? 0 : 1;
}

int cmd_mp_residual(const ProblemOpts& po, const std::string& vspec,
                    const std::string& reading_s, double eval_radius,
                    double stencil_h, double pde_tol, double bc_tol) {
  const ProblemSpec spec = po.build();
  const MdReading reading =
      reading_s == "gradvtn" ? MdReading::GradVTn : MdReading::GradVn;
  const MpReport rep = mp_residual_check(spec, parse_velocity(vspec), reading,
                                         eval_radius, stencil_h);
  jsonio::Writer w;
  w.begin_object();
  w.key("pde_residual").value(rep.pde_residual);
  w.key("bc_residual").value(rep.bc_residual);
  w.key("bc_residual_alt").value(rep.bc_residual_alt);
  w.key("stencil_h").value(rep.stencil_h);
  w.key("reading").value(reading_s == "gradvtn" ? "gradvtn" : "gradvn");
  w.end_object();
  emit("mp-residual", w.str());
  return (rep.pde_residual <= pde_tol && rep.bc_residual <= bc_tol) ? 0 : 1;
}

int cmd_crosscheck(const ProblemOpts& po, double tol) {
  const ProblemSpec spec = po.build();
  const CrossCheckReport rep = cross_backend_check(spec);
  jsonio::Writer w;
  w.begin_object();
  w.key("trace_diff").value(rep.trace_diff);
  w.key("field_diff").value(rep.field_diff);
  w.key("bc_residual_series").value(rep.bc_residual_series);
  w.key("bc_residual_nystrom").value(rep.bc_residual_nystrom);
  w.key("tol").value(tol);
  w.end_object();
  emit("crosscheck", w.str());
  return (rep.trace_diff <= tol && rep.field_diff <= tol) ? 0 : 1;
}

int cmd_suite(bool quick) {
  const BatteryReport rep = run_acceptance_battery(quick);
  emit("suite", battery_json(rep));
  return rep.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Shape-sensitivity laboratory for 2D Helmholtz scattering"};
  app.require_subcommand(1);
  app.set_config("--config", "", "flat key = value configuration file");
  app.allow_config_extras(false);
  app.add_option("--seed", g_seed, "provenance seed recorded in every report");

  std::string r = "2", q = "2", k = "1", mode = "classic", format = "json";
  int beta = 0;
  auto* c_reg = app.add_subcommand("regularity", "index calculator");
  c_reg->add_option("--r", r, "domain class C^{r,1}");
  c_reg->add_option("--q", q, "data smoothness (half-integers allowed)");
  c_reg->add_option("--k", k, "velocity class W^{k+1,inf}");
  c_reg->add_option("--beta", beta, "problem family 0..3");
  c_reg->add_option("--mode", mode, "classic | sharp");
  c_reg->add_option("--format", format, "json | table");

  ProblemOpts po;
  std::string vspec = "dilation", reading_s = "gradvn", variant_s = "generalized";

  auto* c_solve = app.add_subcommand("solve", "base scattering solve");
  add_problem_opts(c_solve, po);

  auto* c_der = app.add_subcommand("derive", "derivative data and Cauchy pairs");
  add_problem_opts(c_der, po);
  c_der->add_option("--velocity", vspec, "velocity spec");
  c_der->add_option("--reading", reading_s, "gradvn | gradvtn");
  c_der->add_option("--variant", variant_s, "normal-aligned | generalized");

  std::string target_s = "volume-md", ts_s, tformat = "json";
  double min_slope = -1e9, max_slope = 1e9;
  auto* c_tay = app.add_subcommand("taylor", "remainder ladder study");
  add_problem_opts(c_tay, po);
  c_tay->add_option("--velocity", vspec, "velocity spec");
  c_tay->add_option("--target", target_s,
                    "volume-sd | volume-md | lie-fd | cauchy-md | cauchy-sd | "
                    "stability | cauchy-stability");
  c_tay->add_option("--ts", ts_s, "ladder values t1,t2,...");
  c_tay->add_option("--variant", variant_s, "normal-aligned | generalized");
  c_tay->add_option("--format", tformat, "json | csv");
  c_tay->add_option("--min-slope", min_slope, "pass threshold override");
  c_tay->add_option("--max-slope", max_slope, "pass threshold override");

  std::string v2spec = "dilation";
  double tol = 1e-7;
  auto* c_had = app.add_subcommand("hadamard", "normal-dependence check");
  add_problem_opts(c_had, po);
  c_had->add_option("--v1", vspec, "first velocity spec");
  c_had->add_option("--v2", v2spec, "second velocity spec, same v.n");
  c_had->add_option("--tol", tol, "pass tolerance");

  double eval_radius = 0.0, stencil_h = 1e-3, pde_tol = 1e-6, bc_tol = 1e-7;
  auto* c_mp = app.add_subcommand("mp-residual",
                                  "material-derivative problem residuals");
  add_problem_opts(c_mp, po);
  c_mp->add_option("--velocity", vspec, "velocity spec");
  c_mp->add_option("--reading", reading_s, "gradvn | gradvtn");
  c_mp->add_option("--eval-radius", eval_radius, "PDE residual ring radius");
  c_mp->add_option("--stencil-h", stencil_h, "FD Laplacian step");
  c_mp->add_option("--pde-tol", pde_tol, "PDE residual tolerance");
  c_mp->add_option("--bc-tol", bc_tol, "BC residual tolerance");

  double xtol = 1e-7;
  auto* c_x = app.add_subcommand("crosscheck", "series vs nystrom on the disc");
  add_problem_opts(c_x, po);
  c_x->add_option("--tol", xtol, "pass tolerance");

  bool quick = false;
  auto* c_suite = app.add_subcommand("suite", "full verification battery");
  c_suite->add_flag("--quick", quick, "trimmed grids");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (c_reg->parsed()) return cmd_regularity(r, q, k, beta, mode, format);
    if (c_solve->parsed()) return cmd_solve(po);
    if (c_der->parsed()) return cmd_derive(po, vspec, reading_s, variant_s);
    if (c_tay->parsed())
      return cmd_taylor(po, vspec, target_s, ts_s, variant_s, tformat,
                        min_slope, max_slope);
    if (c_had->parsed()) return cmd_hadamard(po, vspec, v2spec, tol);
    if (c_mp->parsed())
      return cmd_mp_residual(po, vspec, reading_s, eval_radius, stencil_h,
                             pde_tol, bc_tol);
    if (c_x->parsed()) return cmd_crosscheck(po, xtol);
    if (c_suite->parsed()) return cmd_suite(quick);
  } catch (const Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 2;
}
