#ifndef HELMSENS_ERRORS_HPP
#define HELMSENS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace helmsens {

// Base for all structured errors. `code()` is a stable machine-readable tag,
// what() carries the violated condition spelled out.
class Error : public std::runtime_error {
public:
  Error(std::string code, const std::string& msg)
      : std::runtime_error(msg), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

private:
  std::string code_;
};

#define HELMSENS_DEFINE_ERROR(Name)                        \
  class Name : public Error {                              \
  public:                                                  \
    explicit Name(const std::string& msg)                  \
        : Error(#Name, msg) {}                             \
  }

HELMSENS_DEFINE_ERROR(ClassicModeRange);
HELMSENS_DEFINE_ERROR(NegativeIndex);
HELMSENS_DEFINE_ERROR(PreconditionViolated);
HELMSENS_DEFINE_ERROR(NonpositiveRadius);
HELMSENS_DEFINE_ERROR(UnderResolved);
HELMSENS_DEFINE_ERROR(NotStarshaped);
HELMSENS_DEFINE_ERROR(FitResidualExceeded);
HELMSENS_DEFINE_ERROR(RegionIntersectsBoundary);
HELMSENS_DEFINE_ERROR(ResonanceIllConditioned);
HELMSENS_DEFINE_ERROR(IllConditioned);
HELMSENS_DEFINE_ERROR(WrongRegion);
HELMSENS_DEFINE_ERROR(NearBoundaryEvaluation);
HELMSENS_DEFINE_ERROR(MissingExtras);
HELMSENS_DEFINE_ERROR(MissingSurfaceGradient);
HELMSENS_DEFINE_ERROR(MissingTrace);
HELMSENS_DEFINE_ERROR(MissingSecondTrace);
HELMSENS_DEFINE_ERROR(OutsideExtensionSupport);
HELMSENS_DEFINE_ERROR(NormalMismatch);
HELMSENS_DEFINE_ERROR(NotSupported);
HELMSENS_DEFINE_ERROR(LadderUnsolvable);
HELMSENS_DEFINE_ERROR(SlopeUnstable);
HELMSENS_DEFINE_ERROR(ParseError);

#undef HELMSENS_DEFINE_ERROR

}  // namespace helmsens

#endif
