#ifndef HIGGS_ERROR_HPP
#define HIGGS_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace higgs {

enum class ErrorKind {
  DivisionFailure,
  ZeroPolynomial,
  CapExceeded,
  DimensionMismatch,
  NotRankOne,
  ZeroInput,
  FactorizationInconsistent,
  FactorizationMismatch,
  CayleyHamiltonViolation,
  RankUnsupported,
  PreconditionViolated,
  InvalidModel,
  SpecialDivisorUndecidable,
  ZeroHiggsUnsupported,
  DegreeOrderViolation,
  UnsupportedShape,
  NilpotentDatum,
  NotInSpectralBase,
  SectionIdentityViolation,
  NotApplicable,
  InconsistentBranchData,
  RankCap,
  ParseError,
  SchemaError,
};

std::string_view to_string(ErrorKind kind);

// Every domain failure is reported through this one exception type. The
// witness is a human-readable rendering of whatever caused the failure
// (a remainder, a nonzero minor, an offending config path).
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string witness);

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& witness() const noexcept { return witness_; }

  // Parse and schema failures map to exit code 2, everything else to 1.
  bool is_input_error() const noexcept {
    return kind_ == ErrorKind::ParseError || kind_ == ErrorKind::SchemaError;
  }

 private:
  ErrorKind kind_;
  std::string witness_;
};

[[noreturn]] inline void fail(ErrorKind kind, std::string witness) {
  throw Error(kind, std::move(witness));
}

}  // namespace higgs

#endif
