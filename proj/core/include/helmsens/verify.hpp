#ifndef HELMSENS_VERIFY_HPP
#define HELMSENS_VERIFY_HPP

#include <vector>

#include "helmsens/derivatives.hpp"
#include "helmsens/norms.hpp"

namespace helmsens {

enum class Backend { Series, Nystrom };

// One base scattering configuration. The series backend requires a centered
// disc (single real radius coefficient); the Nystrom backend takes any
// starshaped curve but not the transmission problem.
struct ProblemSpec {
  reg::ProblemKind beta = reg::ProblemKind::Dirichlet;
  WaveParameters params;
  PlaneWave incident;
  std::vector<Complex> radius_coefficients = {Complex(1.0, 0.0)};
  std::size_t N = 256;
  Backend backend = Backend::Series;

  StarCurve curve() const { return StarCurve::make(radius_coefficients, N); }
};

// What a Taylor ladder compares.
//   VolumeSd:  U_t(x)         vs U + t U'              at fixed points
//   VolumeMd:  U_t(T_t x)     vs U + t (U' + grad U.v) pulled back
//   LieFd:     (U_t(T_t x) - U)/t vs U-dot             (first order)
//   CauchyMd:  xi_t o T_t     vs xi + t xi-dot         (cauchy_md)
//   CauchySd:  xi_t o T_t     vs xi + t (xi' + grad_G xi.v)  (cauchy_sd + Lie)
//   Stability: ||U_t o T_t - U||, expected exponent 1
//   CauchyStability: ||xi_t o T_t - xi||, expected exponent 1
enum class StudyTarget {
  VolumeSd,
  VolumeMd,
  LieFd,
  CauchyMd,
  CauchySd,
  Stability,
  CauchyStability,
};

struct TaylorStudy {
  ProblemSpec problem;
  VelocityField velocity = VelocityField::dilation();
  StudyTarget target = StudyTarget::VolumeMd;
  std::vector<double> ts;  // empty -> 10^{-1.5}, 10^{-2}, ..., 10^{-3.5}
  MdReading reading = MdReading::GradVn;
  CmdVariant variant = CmdVariant::Generalized;
  // Volume targets measure the remainder in L2 over this annulus; {0, 0}
  // picks [1.6, 2.2] * rho_max. It must stay clear of every flowed boundary
  // (checked). Cauchy targets use the HH^0 surrogate norm on the nodes.
  Annulus region{0.0, 0.0};
  std::size_t n_radial = 6;
  std::size_t n_angular = 32;
};

struct StudyReport {
  std::vector<double> ts;
  std::vector<double> remainders;
  double slope = 0.0;
  double reference_scale = 0.0;  // norm of the derivative object itself
  bool degenerate = false;       // remainders at noise floor, slope unfit
};

// Ladder rungs run concurrently when HELMSENS_THREADS is set above 1; output
// order (and hence every serialized report) is independent of the thread
// count.
StudyReport taylor_study(const TaylorStudy& st);

// Log-log least-squares exponent; the largest-t rung is dropped (preasymptotic)
// and rungs below the noise floor are ignored. Throws SlopeUnstable when fewer
// than two usable rungs remain.
double fit_slope(const std::vector<double>& ts,
                 const std::vector<double>& remainders);

// Shape derivatives for two extensions with the same normal trace v.n must
// coincide. Throws NormalMismatch when the traces differ to begin with.
struct HadamardReport {
  double vn_mismatch = 0.0;
  double field_diff = 0.0;  // max over the eval ring
  double trace_diff = 0.0;  // max over boundary nodes
};
HadamardReport hadamard_check(const ProblemSpec& spec, const VelocityField& v1,
                              const VelocityField& v2, double eval_radius = 0.0);

// Commutation of the boundary Lie derivative: cauchy_md agrees with
// boundary_lie applied to cauchy_sd, node by node.
double cld_residual(const ProblemSpec& spec, const VelocityField& v,
                    CmdVariant variant);

// Structure facts: the Dirichlet SD has lambda' = 0, the Neumann SD sigma' = 0.
double vanishing_sd_component(const ProblemSpec& spec, const VelocityField& v);

// Purely tangential velocity on an invariant curve: the SD vanishes.
double tangential_sd_max(const ProblemSpec& spec, const VelocityField& v,
                         double eval_radius = 0.0);

// Residuals of the material-derivative problem, series backend:
//   pde: |lap U-dot + kappa^2 U-dot + f_beta| with a 5-point stencil Laplacian
//   bc:  boundary-condition residual against m_beta for the given reading
//   bc_alt: same with the other reading of the ambiguous term
struct MpReport {
  double pde_residual = 0.0;
  double bc_residual = 0.0;
  double bc_residual_alt = 0.0;
  double stencil_h = 0.0;
};
MpReport mp_residual_check(const ProblemSpec& spec, const VelocityField& v,
                           MdReading reading = MdReading::GradVn,
                           double eval_radius = 0.0, double stencil_h = 1e-3);

// Same disc solved by both backends.
struct CrossCheckReport {
  double trace_diff = 0.0;
  double field_diff = 0.0;
  double bc_residual_series = 0.0;
  double bc_residual_nystrom = 0.0;
};
CrossCheckReport cross_backend_check(const ProblemSpec& spec);

// Per-mode magnitude of the transmission jump conditions, relative to the
// trace scale.
double transmission_mode_residual(const SeriesSolution& sol, std::size_t N);

}  // namespace helmsens

#endif
