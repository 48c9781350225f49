#ifndef HYPERCONV_ERRORS_HPP
#define HYPERCONV_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hyperconv {

/// Base class for all library errors.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Invalid input that a caller could have checked (exit code 2 in the CLI).
struct ValidationError : Error {
  using Error::Error;
};

struct SpaceMismatch : ValidationError { using ValidationError::ValidationError; };
struct KernelError : Error { using Error::Error; };
struct GridOverflow : ValidationError { using ValidationError::ValidationError; };
struct BadTolerance : ValidationError { using ValidationError::ValidationError; };
struct NotPositive : ValidationError { using ValidationError::ValidationError; };
struct UncertifiedSemicharacter : ValidationError { using ValidationError::ValidationError; };
struct NotPositiveMeasure : ValidationError { using ValidationError::ValidationError; };
struct ZeroMeasure : ValidationError { using ValidationError::ValidationError; };
struct BadTestFunction : ValidationError { using ValidationError::ValidationError; };
struct NonCommutative : ValidationError { using ValidationError::ValidationError; };
struct BadProfile : ValidationError { using ValidationError::ValidationError; };
struct SolverDefect : Error { using Error::Error; };
struct NoLimit : Error { using Error::Error; };
struct TruncationError : Error { using Error::Error; };
struct BadRank : ValidationError { using ValidationError::ValidationError; };
struct DimensionError : ValidationError { using ValidationError::ValidationError; };
struct BadPair : ValidationError { using ValidationError::ValidationError; };
struct BadDescriptor : ValidationError { using ValidationError::ValidationError; };

}  // namespace hyperconv

#endif
