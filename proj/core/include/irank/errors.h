#ifndef IRANK_ERRORS_H_
#define IRANK_ERRORS_H_

#include <stdexcept>
#include <string>

namespace irank {

enum class ErrorKind {
  kParse,
  kInvalidValue,
  kDimensionMismatch,
  kDivisorContainsZero,
  kZeroScale,
  kPreconditionViolated,
  kInvalidDiagonal,
  kSizeLimitExceeded,
  kEliminationBlowup,
};

const char* ErrorKindName(ErrorKind kind);

// Base of every error raised by the library. The kind drives the CLI exit
// code; the message names the offending entry whenever one exists.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

#define IRANK_DEFINE_ERROR(Name, Kind)                                   \
  class Name : public Error {                                            \
   public:                                                               \
    explicit Name(const std::string& message) : Error(Kind, message) {}  \
  }

IRANK_DEFINE_ERROR(ParseError, ErrorKind::kParse);
IRANK_DEFINE_ERROR(InvalidValueError, ErrorKind::kInvalidValue);
IRANK_DEFINE_ERROR(DimensionMismatchError, ErrorKind::kDimensionMismatch);
IRANK_DEFINE_ERROR(DivisorContainsZeroError, ErrorKind::kDivisorContainsZero);
IRANK_DEFINE_ERROR(ZeroScaleError, ErrorKind::kZeroScale);
IRANK_DEFINE_ERROR(PreconditionError, ErrorKind::kPreconditionViolated);
IRANK_DEFINE_ERROR(InvalidDiagonalError, ErrorKind::kInvalidDiagonal);
IRANK_DEFINE_ERROR(SizeLimitExceededError, ErrorKind::kSizeLimitExceeded);
IRANK_DEFINE_ERROR(EliminationBlowupError, ErrorKind::kEliminationBlowup);

#undef IRANK_DEFINE_ERROR

}  // namespace irank

#endif  // IRANK_ERRORS_H_
