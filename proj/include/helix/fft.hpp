#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

// Thin c2c DFT front end over FFTW3. Dims follow the project's canonical
// layout (axis 0 fastest). Plans are created with FFTW_ESTIMATE only, so a
// given transform size always picks the same algorithm and results are
// reproducible bit-for-bit; planner access is serialized internally, execution
// is concurrent-safe.

namespace helix::fft {

using cdouble = std::complex<double>;

/// In-place forward DFT (unnormalized).
void forward(std::span<const std::int64_t> dims, cdouble* data);
/// In-place inverse DFT, normalized by 1/product(dims).
void inverse(std::span<const std::int64_t> dims, cdouble* data);

/// Forward DFT of a real array.
std::vector<cdouble> forward_real(std::span<const std::int64_t> dims,
                                  std::span<const double> data);

}  // namespace helix::fft
