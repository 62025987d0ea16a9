#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "helix/field.hpp"

// Power spectra on the DFT grid, real cepstra of power spectra, admissible
// region projection windows, and the inverse homomorphic transform
// H^{-1} = IDFT o exp o DFT. Only real logarithms are taken: every spectrum
// here is real and non-negative, so no phase unwrapping is involved.

namespace helix {

inline constexpr double kDefaultFloorRel = 1e-12;

struct PowerSpectrum {
  std::vector<std::int64_t> dims;
  std::vector<double> values;  // >= 0 on the d-dimensional DFT grid
  double floor_applied = 0.0;  // regularization baked in at construction, 0 if none
};

// Quefrency-domain array, index aliased modulo dims (the DFT cepstrum is an
// aliased version of the true cepstrum).
struct Cepstrum {
  std::vector<std::int64_t> dims;
  std::vector<double> values;
  double floor_value = 0.0;        // absolute spectral floor applied before log
  std::int64_t floored_bins = 0;   // how many bins the floor clamped
};

enum class RegionKind : std::uint8_t {
  Causal1D,
  Quadrant,
  UpperNSHP,
  LowerNSHP,
  UpperNSHS3D,
  LowerNSHS3D,
};

// Admissible region on the signed quefrency lattice. The half-space kinds are
// lexicographic from the slowest axis down: a point is inside when its most
// significant nonzero coordinate (scanning axes last to first) is positive,
// or when it is the origin. Quadrant uses per-axis sign constraints.
struct Region {
  RegionKind kind = RegionKind::Causal1D;
  std::array<std::int8_t, 3> signs{1, 1, 1};  // Quadrant only
  int quadrant_arity = 2;                     // Quadrant only

  static Region causal1d();
  static Region upper_nshp();
  static Region lower_nshp();
  static Region upper_nshs3d();
  static Region lower_nshs3d();
  static Region quadrant(std::span<const int> axis_signs);

  int arity() const;
  Region mirror() const;
  bool contains(std::span<const std::int64_t> signed_idx) const;
};

const char* to_string(RegionKind kind);

// Per-cell weights realizing a projection operator: 1 on the region interior,
// 0 on the mirror interior, 1/2 at self-conjugate cells. Cells whose signed
// representative is ambiguous (index N/2 on an even axis reads as both +N/2
// and -N/2) average the membership over representatives. Invariant:
// weights(region) + weights(mirror) = 1 at every cell, on even and odd dims.
struct ProjectionWindow {
  std::vector<std::int64_t> dims;
  std::vector<double> weights;
};

PowerSpectrum power_spectrum(const Field& f);

/// Spectrum of a field that already holds an autocorrelation: S = Re DFT(r).
/// Values must be non-negative up to roundoff (positive definiteness);
/// negative roundoff is clamped to zero, genuinely negative values throw.
PowerSpectrum autocorrelation_spectrum(const Field& r);

/// Real cepstrum: IDFT of log(max(S, floor_rel * max(S))). Output is even
/// symmetric up to roundoff. Throws DomainError on an identically zero
/// spectrum.
Cepstrum cepstrum_of_spectrum(const PowerSpectrum& s, double floor_rel = kDefaultFloorRel);

ProjectionWindow region_window(const Region& region, std::span<const std::int64_t> dims);

/// Pointwise product with the window weights.
Cepstrum project(const Cepstrum& c, const ProjectionWindow& w);

struct InverseHomomorphic {
  Field field;
  double imag_residue = 0.0;  // relative L2 of the discarded imaginary part
};

/// H^{-1}(c) = IDFT(exp(DFT(c))), real part. Throws DomainError when exp
/// overflows (cepstral values too large).
InverseHomomorphic inverse_homomorphic(const Cepstrum& c);

/// Complex cepstrum of a field through the principal-branch log of its DFT.
/// Valid while the phase stays inside (-pi, pi]; used for causality
/// diagnostics of minimum-phase factors. DFT bins at exactly zero are clamped
/// to a tiny value so the log stays finite.
Cepstrum complex_cepstrum(const Field& f);

}  // namespace helix
