#ifndef HELMSENS_DERIVATIVES_HPP
#define HELMSENS_DERIVATIVES_HPP

#include "helmsens/bie.hpp"
#include "helmsens/mie.hpp"
#include "helmsens/velocity.hpp"

namespace helmsens {

// The Neumann-type derivative data contain a term written ambiguously as
// "-grad v^T . U . n". GradVn reads it as -(grad v n) . grad U (equivalently
// -(grad v^T grad U) . n); GradVTn reads it as -(grad v^T n) . grad U. Both
// are implemented; the residual studies single out the consistent one.
enum class MdReading { GradVn, GradVTn };

// NormalAligned: sigma-dot uses grad_Gamma(v.n), exact when v is normal-
// aligned on Gamma (where n-dot = -grad_Gamma(v.n)). Generalized: the full
// normal derivative n-dot = -P_tau(grad v^T n), valid for every field.
enum class CmdVariant { NormalAligned, Generalized };

struct SdData {
  bool pair = false;
  BoundaryField g;        // beta = 0, 1, 2
  BoundaryField g0, g1;   // beta = 3 jump pair
};

struct MdData {
  bool pair = false;
  BoundaryField m;        // beta = 0, 1, 2 (m0 is returned explicitly as 0)
  BoundaryField m0, m1;   // beta = 3 jump pair
};

// g_beta of (SP_beta).
SdData sd_boundary_data(reg::ProblemKind beta, const StarCurve& curve,
                        const TraceBundle& tb, const BoundaryVelocity& bv,
                        const WaveParameters& params);

// m_beta of (MP_beta).
MdData md_boundary_data(reg::ProblemKind beta, const StarCurve& curve,
                        const TraceBundle& tb, const BoundaryVelocity& bv,
                        const std::vector<VelocityJet>& jets,
                        const WaveParameters& params,
                        MdReading reading = MdReading::GradVn);

// f_beta = div(A'(0) grad U) + kappa^2 div(v) U at a volume point
// (= -lap v . grad U + A'(0) : hess U + kappa^2 div v U).
Complex md_volume_source(const SeriesSolution& U, const VelocityField& v,
                         Vec2 x);

// SD solves: radiating problem with datum g_beta on the unperturbed curve.
SeriesSolution solve_sd_mie(const SeriesSolution& U, const VelocityField& v);
BIESolution solve_sd_bie(const BIESolution& U, const VelocityField& v,
                         bool certify = false);

// Traces of the Lie-derived MD field U-dot = U' + grad U . v:
//   gamma0 U-dot = lambda' + sigma (v.n) + (dlambda/ds)(v.tau)
//   gamma1 U-dot = sigma' + gamma2 U (v.n)
//                  + (dsigma/ds - H dlambda/ds)(v.tau) + (grad v n) . grad U
CauchyData md_field_traces(const StarCurve& curve, const TraceBundle& base,
                           const CauchyData& sd_traces,
                           const BoundaryVelocity& bv,
                           const std::vector<VelocityJet>& jets);

// CMD pair: (gamma0 U-dot, gamma1 U-dot - reading term - correction).
CauchyData cauchy_md(const StarCurve& curve, const TraceBundle& base,
                     const CauchyData& md_traces, const BoundaryVelocity& bv,
                     const std::vector<VelocityJet>& jets,
                     MdReading reading = MdReading::GradVn,
                     CmdVariant variant = CmdVariant::NormalAligned);

// CSD pair: (gamma0 U' + sigma (v.n),
//            gamma1 U' + gamma2 U (v.n) - grad_Gamma U . grad_Gamma(v.n)).
CauchyData cauchy_sd(const StarCurve& curve, const TraceBundle& base,
                     const CauchyData& sd_traces, const BoundaryVelocity& bv);

// Boundary Lie relation xi-dot = xi' + grad_Gamma xi . v, applied
// component-wise to an independently obtained xi'.
CauchyData boundary_lie(const StarCurve& curve, const CauchyData& base_xi,
                        const CauchyData& xi_prime, const BoundaryVelocity& bv);

}  // namespace helmsens

#endif
