#include "higgs/error.hpp"

namespace higgs {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DivisionFailure: return "DivisionFailure";
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NotRankOne: return "NotRankOne";
    case ErrorKind::ZeroInput: return "ZeroInput";
    case ErrorKind::FactorizationInconsistent: return "FactorizationInconsistent";
    case ErrorKind::FactorizationMismatch: return "FactorizationMismatch";
    case ErrorKind::CayleyHamiltonViolation: return "CayleyHamiltonViolation";
    case ErrorKind::RankUnsupported: return "RankUnsupported";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::InvalidModel: return "InvalidModel";
    case ErrorKind::SpecialDivisorUndecidable: return "SpecialDivisorUndecidable";
    case ErrorKind::ZeroHiggsUnsupported: return "ZeroHiggsUnsupported";
    case ErrorKind::DegreeOrderViolation: return "DegreeOrderViolation";
    case ErrorKind::UnsupportedShape: return "UnsupportedShape";
    case ErrorKind::NilpotentDatum: return "NilpotentDatum";
    case ErrorKind::NotInSpectralBase: return "NotInSpectralBase";
    case ErrorKind::SectionIdentityViolation: return "SectionIdentityViolation";
    case ErrorKind::NotApplicable: return "NotApplicable";
    case ErrorKind::InconsistentBranchData: return "InconsistentBranchData";
    case ErrorKind::RankCap: return "RankCap";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::SchemaError: return "SchemaError";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, std::string witness)
    : std::runtime_error(std::string(to_string(kind)) + ": " + witness),
      kind_(kind),
      witness_(std::move(witness)) {}

}  // namespace higgs
