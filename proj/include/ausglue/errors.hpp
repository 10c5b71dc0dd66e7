#pragma once

#include <stdexcept>
#include <string>

namespace ausglue {

// Every failure the library reports carries a stable kind string so the CLI
// can map it to an exit code and reports can quote it.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}
  const std::string& kind() const { return kind_; }

 private:
  std::string kind_;
};

#define AUSGLUE_ERROR(Name)                                              \
  class Name : public Error {                                            \
   public:                                                               \
    explicit Name(const std::string& what = "") : Error(#Name, what) {} \
  }

AUSGLUE_ERROR(FieldMismatch);
AUSGLUE_ERROR(NoSolution);
AUSGLUE_ERROR(InvalidDynkinSpec);
AUSGLUE_ERROR(InvalidParams);
AUSGLUE_ERROR(ParseError);
AUSGLUE_ERROR(InfiniteDimensional);
AUSGLUE_ERROR(DecompositionFailed);
AUSGLUE_ERROR(Truncated);
AUSGLUE_ERROR(BudgetExceeded);
AUSGLUE_ERROR(NonSchurianVertex);
AUSGLUE_ERROR(NotHereditary);
AUSGLUE_ERROR(NotRepFinite);
AUSGLUE_ERROR(NotClusterTilting);
AUSGLUE_ERROR(GldimTooBig);
AUSGLUE_ERROR(NotComposable);
AUSGLUE_ERROR(OrbitDiverges);
AUSGLUE_ERROR(NoApproximation);

#undef AUSGLUE_ERROR

}  // namespace ausglue
