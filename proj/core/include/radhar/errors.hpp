#pragma once

#include <stdexcept>
#include <string>

namespace radhar {

/// Linear-algebra or iteration failure (singular covariance, non-finite result).
struct NumericalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Statistic undefined for the given input (e.g. correlation of a constant image).
struct UndefinedStatisticError : std::domain_error {
    using std::domain_error::domain_error;
};

namespace io {

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Header or structural violation: bad magic, dtype, ndim, zero dims.
struct FormatError : IoError {
    using IoError::IoError;
};

/// File length does not match the header-declared payload.
struct TruncationError : IoError {
    using IoError::IoError;
};

/// Payload checksum mismatch.
struct CorruptionError : IoError {
    using IoError::IoError;
};

struct UnsupportedVersionError : IoError {
    using IoError::IoError;
};

}  // namespace io
}  // namespace radhar
