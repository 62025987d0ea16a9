#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "helix/field.hpp"

// Synthetic data: Ricker impulse responses on a moveout hyperbola, white
// Gaussian excitations, their circular convolution, and closed-form damped
// plane-wave solutions of the viscous wave equation.

namespace helix {

struct RickerParams {
  double sigma = 0.01;      // wavelet width, seconds
  double distance = 50.0;   // source distance R, meters
  double speed = 1000.0;    // propagation speed v, m/s
  double dt = 0.02;         // temporal step, seconds
  double dx = 5.0;          // spatial step, meters
};

/// Ricker amplitude (1 - u^2/sigma^2) exp(-u^2/(2 sigma^2)) at time offset u
/// from the wavelet center. Zero exactly at u = +-sigma.
double ricker_amplitude(double time_offset, double sigma);

/// Travel time tau(x) = sqrt(x^2 + R^2) / v.
double ricker_traveltime(const RickerParams& p, double x);

/// Impulse response h(m dx, n dt) on a space x time grid, normalized to unit
/// peak absolute value.
Field ricker_response(const RickerParams& p, std::int64_t space_samples,
                      std::int64_t time_samples);

/// I.i.d. standard normal field, deterministic per seed (see rng.hpp for the
/// fixed generator).
Field white_excitation(std::uint64_t seed, std::span<const std::int64_t> dims,
                       std::span<const double> steps = {});
Field white_excitation(std::uint64_t seed, std::int64_t space_samples,
                       std::int64_t time_samples);

/// Circular convolution via DFT product; dims must match, steps taken from h.
Field synth_data(const Field& h, const Field& s);

enum class WaveDirection : std::uint8_t { Forward, Backward };

struct PlaneWaveParams {
  double amplitude = 1.0;   // A0
  double alpha = 0.05;      // spatial attenuation, 1/m
  double beta = 0.05;       // temporal attenuation, 1/s
  double wavenumber = 0.1;  // k, rad/m
  double omega = 50.0;      // angular frequency, rad/s
  double dx = 5.0;
  double dt = 0.02;
};

/// Forward complex lattice sample A0 e^{-alpha m dx} e^{-beta n dt}
/// e^{i(k m dx - omega n dt)}.
std::complex<double> plane_wave_sample(const PlaneWaveParams& p, std::int64_t m,
                                       std::int64_t n);

/// Real part of the sampled plane wave; Backward is the forward field with the
/// time index reversed, n -> (N - n) mod N.
Field plane_wave(const PlaneWaveParams& p, std::int64_t space_samples,
                 std::int64_t time_samples, WaveDirection direction);

}  // namespace helix
