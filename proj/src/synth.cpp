#include "helix/synth.hpp"

#include <omp.h>

#include <cmath>

#include "helix/errors.hpp"
#include "helix/fft.hpp"
#include "helix/kernels.hpp"
#include "helix/rng.hpp"

namespace helix {

double ricker_amplitude(double time_offset, double sigma) {
  const double q = (time_offset * time_offset) / (sigma * sigma);
  return (1.0 - q) * std::exp(-0.5 * q);
}

double ricker_traveltime(const RickerParams& p, double x) {
  return std::sqrt(x * x + p.distance * p.distance) / p.speed;
}

Field ricker_response(const RickerParams& p, std::int64_t space_samples,
                      std::int64_t time_samples) {
  if (space_samples <= 0 || time_samples <= 0)
    throw ShapeError("ricker_response: sample counts must be positive");
  if (!(p.sigma > 0.0 && p.distance > 0.0 && p.speed > 0.0 && p.dt > 0.0 && p.dx > 0.0))
    throw DomainError("ricker_response: parameters must be positive");
  Field h = zeros({space_samples, time_samples}, {p.dx, p.dt});
  const std::int64_t m_count = space_samples;
#pragma omp parallel for schedule(static) if (kernels::use_parallel(h.data.size()))
  for (std::int64_t m = 0; m < m_count; ++m) {
    const double tau = ricker_traveltime(p, static_cast<double>(m) * p.dx);
    for (std::int64_t n = 0; n < time_samples; ++n) {
      h.data[static_cast<std::size_t>(m + space_samples * n)] =
          ricker_amplitude(static_cast<double>(n) * p.dt - tau, p.sigma);
    }
  }
  const double peak = kernels::max_abs(h.data);
  if (peak > 0.0) kernels::scale(h.data, 1.0 / peak);
  return h;
}

Field white_excitation(std::uint64_t seed, std::span<const std::int64_t> dims,
                       std::span<const double> steps) {
  std::vector<double> st(steps.begin(), steps.end());
  if (st.empty()) st.assign(dims.size(), 1.0);
  Field f = zeros(std::vector<std::int64_t>(dims.begin(), dims.end()), std::move(st));
  // sequential fill keeps the stream independent of threading
  NormalStream stream(seed);
  for (auto& x : f.data) x = stream.next();
  return f;
}

Field white_excitation(std::uint64_t seed, std::int64_t space_samples,
                       std::int64_t time_samples) {
  const std::int64_t dims[2] = {space_samples, time_samples};
  return white_excitation(seed, std::span<const std::int64_t>(dims, 2));
}

Field synth_data(const Field& h, const Field& s) {
  validate(h);
  validate(s);
  if (h.dims != s.dims) throw ShapeError("synth_data: impulse response and excitation dims differ");
  auto hf = fft::forward_real(h.dims, h.data);
  auto sf = fft::forward_real(s.dims, s.data);
  kernels::complex_multiply(hf, sf);
  fft::inverse(h.dims, hf.data());
  Field d = zeros(h.dims, h.steps);
  kernels::real_part(hf, d.data);
  return d;
}

std::complex<double> plane_wave_sample(const PlaneWaveParams& p, std::int64_t m,
                                       std::int64_t n) {
  const double x = static_cast<double>(m) * p.dx;
  const double t = static_cast<double>(n) * p.dt;
  const double envelope = p.amplitude * std::exp(-p.alpha * x) * std::exp(-p.beta * t);
  const double phase = p.wavenumber * x - p.omega * t;
  return std::polar(envelope, phase);
}

Field plane_wave(const PlaneWaveParams& p, std::int64_t space_samples,
                 std::int64_t time_samples, WaveDirection direction) {
  if (space_samples <= 0 || time_samples <= 0)
    throw ShapeError("plane_wave: sample counts must be positive");
  Field f = zeros({space_samples, time_samples}, {p.dx, p.dt});
#pragma omp parallel for schedule(static) if (kernels::use_parallel(f.data.size()))
  for (std::int64_t n = 0; n < time_samples; ++n) {
    const std::int64_t src_n =
        direction == WaveDirection::Forward ? n : (time_samples - n) % time_samples;
    for (std::int64_t m = 0; m < space_samples; ++m) {
      f.data[static_cast<std::size_t>(m + space_samples * n)] =
          plane_wave_sample(p, m, src_n).real();
    }
  }
  return f;
}

}  // namespace helix
