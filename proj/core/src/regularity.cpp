#include "helmsens/regularity.hpp"

#include <sstream>

namespace helmsens::reg {

namespace {

const SobolevIndex kZero = SobolevIndex::integer(0);
const SobolevIndex kOne = SobolevIndex::integer(1);
const SobolevIndex kHalf = SobolevIndex::half(1);

}  // namespace

void RegularityQuery::validate_base() const {
  if (r < kZero || !r.is_integer())
    throw PreconditionViolated("requires r integer >= 0, got r = " + r.str());
  if (q < kZero) throw NegativeIndex("requires q >= 0, got q = " + q.str());
  if (k < kZero)
    throw PreconditionViolated("requires k >= 0, got k = " + k.str());
  if (!k.is_integer() && !allow_half_integer_k)
    throw PreconditionViolated(
        "requires k integer (half-integer extension disabled), got k = " +
        k.str());
  if (k > r)
    throw PreconditionViolated("requires k <= r, got k = " + k.str() +
                               ", r = " + r.str());
  if (mode == ShiftMode::Classic && q > r)
    throw ClassicModeRange("classic mode requires q <= r, got q = " + q.str() +
                           ", r = " + r.str());
}

void RegularityQuery::validate_md() const {
  validate_base();
  if (r < kOne)
    throw PreconditionViolated(
        "material derivative requires r >= 1, got r = " + r.str());
  if (q < kOne)
    throw PreconditionViolated(
        "material derivative requires q >= 1, got q = " + q.str());
  if (k < kOne)
    throw PreconditionViolated(
        "material derivative requires k >= 1, got k = " + k.str());
}

void RegularityQuery::validate_sd() const {
  validate_base();
  if (r < kOne)
    throw PreconditionViolated("shape derivative requires r >= 1, got r = " +
                               r.str());
}

SobolevIndex solution_index(const RegularityQuery& query) {
  query.validate_base();
  if (query.mode == ShiftMode::Classic) return query.q;
  return min(query.q, query.r + kHalf);
}

PerturbedIndices perturbed_index(const RegularityQuery& query) {
  query.validate_base();
  PerturbedIndices out;
  out.composed = min(query.q, query.k);
  out.uncomposed = query.mode == ShiftMode::Sharp
                       ? min(query.q, query.k + kHalf)
                       : min(query.q, query.k);
  return out;
}

SobolevIndex md_index(const RegularityQuery& query) {
  query.validate_md();
  if (query.beta == ProblemKind::Dirichlet) return min(query.q, query.k);
  return min(query.q, query.r - kHalf, query.k);
}

SobolevIndex sd_index(const RegularityQuery& query) {
  query.validate_sd();
  if (query.mode == ShiftMode::Classic)
    return min(query.q - kOne, query.k + kHalf);
  return min(query.q - kOne, query.r - kHalf, query.k + kHalf);
}

SobolevIndex md_datum_index(const RegularityQuery& query) {
  query.validate_md();
  return min(query.q, query.r - kHalf, query.k + kHalf);
}

DatumIndices datum_indices(const RegularityQuery& query) {
  query.validate_md();
  query.validate_sd();
  DatumIndices out;
  out.f = min(query.q, query.k) - kOne;
  out.m = md_datum_index(query) - kHalf;
  SobolevIndex sd = sd_index(query);
  out.g_dirichlet = sd + kHalf;
  out.g_neumann = sd - kHalf;
  return out;
}

CauchyIndices cauchy_indices(const RegularityQuery& query) {
  query.validate_md();
  query.validate_sd();
  return CauchyIndices{md_index(query), sd_index(query)};
}

namespace {

std::string exponent(const SobolevIndex& s) { return "H^{" + s.str() + "}"; }

std::string exterior_factor(const SobolevIndex& s, SpaceWeighting w) {
  switch (w) {
    case SpaceWeighting::Loc:
      return exponent(s) + "_loc(D^c)";
    case SpaceWeighting::Kappa:
      return exponent(s) + "_kappa(D^c)";
    case SpaceWeighting::None:
      return exponent(s) + "(D^c)";
  }
  return {};
}

}  // namespace

std::string render_space(const SpaceDescriptor& d) {
  switch (d.carrier) {
    case SpaceCarrier::VolumeExterior:
      return exterior_factor(d.index, d.weighting);
    case SpaceCarrier::VolumePair:
      return exterior_factor(d.index, d.weighting) + " × " + exponent(d.index) +
             "(D)";
    case SpaceCarrier::BoundaryScalar:
      return exponent(d.index) + "(Γ)";
    case SpaceCarrier::BoundaryPair:
      return exponent(d.index + kHalf) + "(Γ) × " + exponent(d.index - kHalf) +
             "(Γ)";
  }
  return {};
}

namespace {

// Pulls the "<idx>" out of a leading "H^{<idx>}" and returns the remainder.
SobolevIndex take_exponent(std::string& text) {
  if (text.rfind("H^{", 0) != 0) throw ParseError("expected H^{: " + text);
  std::size_t close = text.find('}');
  if (close == std::string::npos) throw ParseError("unterminated exponent");
  SobolevIndex idx = SobolevIndex::parse(text.substr(3, close - 3));
  text = text.substr(close + 1);
  return idx;
}

}  // namespace

SpaceDescriptor parse_space(const std::string& rendered) {
  std::string text = rendered;
  SpaceDescriptor d;
  d.index = take_exponent(text);
  if (text.rfind("_loc", 0) == 0) {
    d.weighting = SpaceWeighting::Loc;
    text = text.substr(4);
  } else if (text.rfind("_kappa", 0) == 0) {
    d.weighting = SpaceWeighting::Kappa;
    text = text.substr(6);
  }
  if (text.rfind("(D^c)", 0) == 0) {
    text = text.substr(5);
    if (text.empty()) {
      d.carrier = SpaceCarrier::VolumeExterior;
      return d;
    }
    if (text.rfind(" × ", 0) != 0) throw ParseError("bad pair: " + rendered);
    d.carrier = SpaceCarrier::VolumePair;
    return d;
  }
  if (text.rfind("(Γ)", 0) == 0) {
    std::string gamma = "(Γ)";
    text = text.substr(gamma.size());
    if (text.empty()) {
      d.carrier = SpaceCarrier::BoundaryScalar;
      d.weighting = SpaceWeighting::None;
      return d;
    }
    d.carrier = SpaceCarrier::BoundaryPair;
    d.weighting = SpaceWeighting::None;
    d.index = d.index - kHalf;  // stored index is the pair index
    return d;
  }
  throw ParseError("unrecognized space: " + rendered);
}

RegularityReport full_report(const RegularityQuery& query) {
  RegularityReport rep;
  rep.query = query;

  const bool pair = query.beta == ProblemKind::Transmission;
  SpaceCarrier volume =
      pair ? SpaceCarrier::VolumePair : SpaceCarrier::VolumeExterior;

  auto volume_space = [&](const SobolevIndex& s) {
    SpaceDescriptor d{s + kOne, volume, SpaceWeighting::Loc};
    return IndexedSpace{s, d, render_space(d)};
  };
  auto pair_space = [&](const SobolevIndex& s) {
    SpaceDescriptor d{s, SpaceCarrier::BoundaryPair, SpaceWeighting::None};
    return IndexedSpace{s, d, render_space(d)};
  };

  rep.solution = volume_space(solution_index(query));
  rep.perturbed = perturbed_index(query);
  rep.md = volume_space(md_index(query));
  rep.sd = volume_space(sd_index(query));
  rep.data = datum_indices(query);
  rep.cauchy = cauchy_indices(query);
  rep.cauchy_md_space = pair_space(rep.cauchy.cmd);
  rep.cauchy_sd_space = pair_space(rep.cauchy.csd);
  return rep;
}

}  // namespace helmsens::reg
