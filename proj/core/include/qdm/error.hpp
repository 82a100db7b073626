#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qdm {

enum class Errc {
  kInvalidField,
  kInvalidElement,
  kDivisionByZero,
  kDimensionMismatch,
  kInvalidDimension,
  kAmbientMismatch,
  kNotContained,
  kSingularForm,
  kCapExceeded,
  kIncompleteTable,
  kNotAQMatroid,
  kBasisMismatch,
  kPreconditionViolated,
  kNonUnique,
  kLatticeMismatch,
  kEmptyFamily,
  kNotAQDeltaMatroid,
  kNotOrthogonal,
  kWrongDimensions,
  kUnsupportedAmbient,
  kCertificateMissing,
  kLengthMismatch,
  kNotNested,
  kValidationFailed,
  kInternalInconsistency,
  kParseError,
  kUnknownCase,
  kBudgetZero,
};

std::string_view errc_name(Errc code);

// Every failure raised by the library carries one of the codes above so
// callers (notably the CLI) can map them onto exit statuses.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what),
        code_(code),
        message_(what) {}

  Errc code() const noexcept { return code_; }
  // what() without the code prefix.
  const std::string& message() const noexcept { return message_; }

 private:
  Errc code_;
  std::string message_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace qdm
