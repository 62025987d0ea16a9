#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "helix/synth.hpp"

// Independent Z-domain ground truth: root-based minimum-phase factorization of
// small 1-D autocorrelations, and the analytic pole/zero catalogs of the
// damped plane wave before and after helical mapping.

namespace helix {

struct PoleZero {
  std::complex<double> value;
  int multiplicity = 1;
};

struct PoleZeroSet {
  std::vector<PoleZero> zeros;
  std::vector<PoleZero> poles;
  double gain = 1.0;
};

/// Roots of sum_k coeffs[k] z^k via the companion-matrix eigenvalues.
/// Degree capped at 64.
std::vector<std::complex<double>> polynomial_roots(
    std::span<const std::complex<double>> coeffs_ascending);
std::vector<std::complex<double>> polynomial_roots(std::span<const double> coeffs_ascending);

/// Minimum-phase spectral factor of a finite autocorrelation given as the full
/// even-symmetric sequence r(-K)..r(K) (odd length). Returns the factor
/// a(0..K) scaled so conv(a, reverse(a)) reproduces the input. Throws
/// MarginalSpectrumError when a root sits on the unit circle within 1e-8 and
/// DomainError when the input is not positive definite.
std::vector<double> minphase_oracle_1d(std::span<const double> autocorr);

struct AxisPoleZeros {
  PoleZeroSet space;
  PoleZeroSet time;
};

/// Analytic per-axis catalog of the truncated plane-wave solution: the
/// geometric-series pole on each axis plus the supplementary zeros introduced
/// by truncation (the root that cancels the pole is dropped). Backward flips
/// the time-axis damping and phase.
AxisPoleZeros plane_wave_pz(const PlaneWaveParams& p, std::int64_t space_samples,
                            std::int64_t time_samples, WaveDirection direction);

/// Catalog of the 1-D helix transfer function F(z, z^M): the space pole
/// survives; each time-axis pole of modulus rho becomes M poles of modulus
/// rho^(1/M); truncation zeros map to M-th and MN-th root families with the
/// images that cancel poles removed.
PoleZeroSet helical_pz(const PlaneWaveParams& p, std::int64_t space_samples,
                       std::int64_t time_samples, WaveDirection direction,
                       bool include_time_truncation_zeros = true);

/// The nx helical images of a second-axis zero alpha:
/// |alpha|^(1/nx) e^{i(arg alpha + 2 pi k)/nx}, k = 0..nx-1. Preserves the
/// inside/outside unit-circle classification.
std::vector<std::complex<double>> separable_zero_map(std::complex<double> alpha,
                                                     std::int64_t nx);

}  // namespace helix
