#ifndef HELMSENS_REGULARITY_HPP
#define HELMSENS_REGULARITY_HPP

#include <string>

#include "helmsens/sobolev.hpp"

namespace helmsens::reg {

// Boundary condition family of the scattering problem.
enum class ProblemKind : int {
  Dirichlet = 0,
  Neumann = 1,
  Impedance = 2,
  Transmission = 3,
};

enum class ShiftMode { Classic, Sharp };

// Smoothness bookkeeping for one configuration:
//   r    domain class C^{r,1} (integer >= 0)
//   q    boundary-data smoothness of the incident Cauchy pair
//   k    velocity-field class W^{k+1,inf}
// Half-integer k is accepted only with allow_half_integer_k; the formulas
// extend verbatim but the default mirrors the integer setting.
struct RegularityQuery {
  SobolevIndex r;
  SobolevIndex q;
  SobolevIndex k;
  ProblemKind beta = ProblemKind::Dirichlet;
  ShiftMode mode = ShiftMode::Classic;
  bool allow_half_integer_k = false;

  // Throws PreconditionViolated / ClassicModeRange / NegativeIndex naming the
  // violated bound.
  void validate_base() const;
  void validate_md() const;  // adds r >= 1, q >= 1, 1 <= k <= r
  void validate_sd() const;  // adds r >= 1, q >= 0, k <= r
};

enum class SpaceCarrier {
  VolumeExterior,  // H^s(D^c), weighted loc or kappa
  VolumePair,      // H^s(D^c) x H^s(D), transmission
  BoundaryScalar,  // H^s(Gamma)
  BoundaryPair,    // HH^s(Gamma) = H^{s+1/2}(Gamma) x H^{s-1/2}(Gamma)
};

enum class SpaceWeighting { None, Loc, Kappa };

struct SpaceDescriptor {
  SobolevIndex index;
  SpaceCarrier carrier = SpaceCarrier::BoundaryScalar;
  SpaceWeighting weighting = SpaceWeighting::None;

  bool operator==(const SpaceDescriptor&) const = default;
};

// Deterministic rendering, e.g. "H^{5/2}_loc(D^c) × H^{5/2}(D)",
// "H^{1/2}(Γ) × H^{-1/2}(Γ)". parse_space inverts it exactly.
std::string render_space(const SpaceDescriptor& d);
SpaceDescriptor parse_space(const std::string& text);

struct PerturbedIndices {
  SobolevIndex composed;    // index of U_t pulled back through T_t
  SobolevIndex uncomposed;  // index of U_t itself
};

struct DatumIndices {
  SobolevIndex f;            // volume source of the material-derivative BVP
  SobolevIndex m;            // its boundary datum (beta >= 1)
  SobolevIndex g_dirichlet;  // Dirichlet-type shape-derivative datum
  SobolevIndex g_neumann;    // Neumann/impedance-type shape-derivative datum
};

struct CauchyIndices {
  SobolevIndex cmd;
  SobolevIndex csd;
};

SobolevIndex solution_index(const RegularityQuery& q);
PerturbedIndices perturbed_index(const RegularityQuery& q);
SobolevIndex md_index(const RegularityQuery& q);
SobolevIndex sd_index(const RegularityQuery& q);
DatumIndices datum_indices(const RegularityQuery& q);
CauchyIndices cauchy_indices(const RegularityQuery& q);

// The boundary datum of the MD problem is bounded by a slightly better index
// than the MD itself; exposed separately (see DatumIndices::m).
SobolevIndex md_datum_index(const RegularityQuery& q);

struct IndexedSpace {
  SobolevIndex index;
  SpaceDescriptor space;
  std::string rendered;
};

// Everything at once, every entry reproducible from the operations above.
struct RegularityReport {
  RegularityQuery query;
  IndexedSpace solution;
  PerturbedIndices perturbed;
  IndexedSpace md;
  IndexedSpace sd;
  DatumIndices data;
  CauchyIndices cauchy;
  IndexedSpace cauchy_md_space;
  IndexedSpace cauchy_sd_space;
};

RegularityReport full_report(const RegularityQuery& q);

}  // namespace helmsens::reg

#endif
