#include "qdm/error.hpp"

namespace qdm {

std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::kInvalidField: return "InvalidField";
    case Errc::kInvalidElement: return "InvalidElement";
    case Errc::kDivisionByZero: return "DivisionByZero";
    case Errc::kDimensionMismatch: return "DimensionMismatch";
    case Errc::kInvalidDimension: return "InvalidDimension";
    case Errc::kAmbientMismatch: return "AmbientMismatch";
    case Errc::kNotContained: return "NotContained";
    case Errc::kSingularForm: return "SingularForm";
    case Errc::kCapExceeded: return "CapExceeded";
    case Errc::kIncompleteTable: return "IncompleteTable";
    case Errc::kNotAQMatroid: return "NotAQMatroid";
    case Errc::kBasisMismatch: return "BasisMismatch";
    case Errc::kPreconditionViolated: return "PreconditionViolated";
    case Errc::kNonUnique: return "NonUnique";
    case Errc::kLatticeMismatch: return "LatticeMismatch";
    case Errc::kEmptyFamily: return "EmptyFamily";
    case Errc::kNotAQDeltaMatroid: return "NotAQDeltaMatroid";
    case Errc::kNotOrthogonal: return "NotOrthogonal";
    case Errc::kWrongDimensions: return "WrongDimensions";
    case Errc::kUnsupportedAmbient: return "UnsupportedAmbient";
    case Errc::kCertificateMissing: return "CertificateMissing";
    case Errc::kLengthMismatch: return "LengthMismatch";
    case Errc::kNotNested: return "NotNested";
    case Errc::kValidationFailed: return "ValidationFailed";
    case Errc::kInternalInconsistency: return "InternalInconsistency";
    case Errc::kParseError: return "ParseError";
    case Errc::kUnknownCase: return "UnknownCase";
    case Errc::kBudgetZero: return "BudgetZero";
  }
  return "Unknown";
}

}  // namespace qdm
