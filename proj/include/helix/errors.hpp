#pragma once

#include <stdexcept>
#include <string>

namespace helix {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Structural problems: dimension/length mismatches, bad axes, out-of-range indices.
struct ShapeError : Error {
  using Error::Error;
};

/// Byte-level problems in serialized inputs (HLXF, raw volumes, config files).
struct FormatError : Error {
  using Error::Error;
};

/// Numeric-domain problems: degenerate spectra, non-positive-definite
/// autocorrelations, exp overflow.
struct DomainError : Error {
  using Error::Error;
};

/// Roots or spectra sitting on the unit circle within tolerance; the
/// factorization is not strictly defined there.
struct MarginalSpectrumError : DomainError {
  using DomainError::DomainError;
};

}  // namespace helix
