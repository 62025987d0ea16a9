#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "helix/cepstral.hpp"
#include "helix/field.hpp"
#include "helix/synth.hpp"

// End-to-end spectral factorization: the d-dimensional cepstral route
// (spectrum -> log -> project onto an admissible region -> exp back) and the
// helical route (vectorize, factor the 1-D helix causally, back-project),
// plus the equivalence metrics and experiments comparing them.

namespace helix {

enum class SpectralInput : std::uint8_t {
  Data,             // S = |DFT(input)|^2  (periodogram of raw data)
  Autocorrelation,  // S = Re DFT(input)   (input already an autocorrelation)
};

struct FactorizeOptions {
  double floor_rel = kDefaultFloorRel;
  SpectralInput input = SpectralInput::Data;
  bool diagnostics = true;  // compute causality/magnitude residuals (extra DFTs)
};

struct FactorizationResult {
  Field factor;            // semi-minimum-phase (nd) or minimum-phase (helical) component
  Cepstrum cepstrum_used;  // projected cepstrum, in the domain that was factorized
  Region region;
  HelicalOrder order;      // helix order used; identity for the nd route
  bool helical = false;
  double floor_value = 0.0;
  std::int64_t floored_bins = 0;
  double imag_residue = 0.0;
  // |DFT(factor)|^2 vs the (pre-floor) input spectrum, relative L-infinity
  double magnitude_residual = 0.0;
  // mirror-interior energy fraction of the factor's recomputed complex
  // cepstrum; meaningful while the principal-branch phase does not wrap
  double causality_residual = 0.0;
};

FactorizationResult factorize_nd(const Field& input, const Region& region,
                                 const FactorizeOptions& opt = {});

FactorizationResult factorize_helical(const Field& input, const HelicalOrder& order,
                                      const FactorizeOptions& opt = {});

struct EquivalenceMetrics {
  double e_tot = 0.0;      // squared L2 of the helix-ordered difference
  double pearson_r = 0.0;  // sample correlation over all cells
};

/// Reads both factors along `order` and compares. Throws DomainError when an
/// input has zero variance (correlation undefined).
EquivalenceMetrics compare(const Field& a, const Field& b, const HelicalOrder& order);
EquivalenceMetrics compare(const FactorizationResult& a, const FactorizationResult& b,
                           const HelicalOrder& order);

enum class SweepSource : std::uint8_t {
  Dirac,  // data = the Ricker impulse response itself
  White,  // data = white excitation (*) impulse response
};

struct SweepConfig {
  std::vector<std::int64_t> space_ladder;  // M values
  std::int64_t time_samples = 256;         // N
  SweepSource source = SweepSource::Dirac;
  std::uint64_t seed = 7;
  double floor_rel = kDefaultFloorRel;
  RickerParams ricker{};
  bool parallel = true;  // evaluate ladder entries concurrently
};

struct SweepRow {
  std::int64_t space_samples = 0;
  double e_tot = 0.0;
  double e_tot_norm = 0.0;  // e_tot / input energy
  double pearson_r = 0.0;
};

/// One row per ladder entry, ordered by ascending M, deterministic per config.
std::vector<SweepRow> sweep_equivalence(const SweepConfig& config);

struct BackpropResult {
  double r_forward = 0.0;   // correlation of the helical factor with the forward wave
  double r_backward = 0.0;  // ... with the time-reversed wave
  bool marginal = false;    // undamped parameters: spectrum on the unit circle
};

/// Synthesizes forward + backward damped plane waves, factors the sum through
/// the helix (column-wise by default, periodizing space) and correlates the
/// factor against each component. The forward component should win when the
/// helix periodizes the bounded space axis.
BackpropResult backprop_experiment(const PlaneWaveParams& params,
                                   std::int64_t space_samples, std::int64_t time_samples,
                                   std::optional<HelicalOrder> order = std::nullopt,
                                   double floor_rel = kDefaultFloorRel);

}  // namespace helix
