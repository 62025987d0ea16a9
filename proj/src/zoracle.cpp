#include "helix/zoracle.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "helix/errors.hpp"
#include "helix/fft.hpp"

namespace helix {

namespace {
using cdouble = std::complex<double>;
constexpr double kUnitCircleTol = 1e-8;
constexpr double kPairTol = 1e-8;
constexpr int kMaxDegree = 64;
}  // namespace

std::vector<cdouble> polynomial_roots(std::span<const cdouble> coeffs_ascending) {
  std::vector<cdouble> c(coeffs_ascending.begin(), coeffs_ascending.end());
  while (!c.empty() && c.back() == cdouble(0.0, 0.0)) c.pop_back();
  if (c.size() < 2) {
    if (c.empty()) throw DomainError("polynomial_roots: zero polynomial");
    return {};
  }
  std::vector<cdouble> roots;
  std::size_t first = 0;
  while (first < c.size() - 1 && c[first] == cdouble(0.0, 0.0)) {
    roots.emplace_back(0.0, 0.0);  // factor z out
    ++first;
  }
  const std::size_t degree = c.size() - 1 - first;
  if (degree > kMaxDegree)
    throw DomainError("polynomial_roots: degree " + std::to_string(degree) +
                      " exceeds cap " + std::to_string(kMaxDegree));
  if (degree == 0) return roots;

  Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(degree),
                                                      static_cast<Eigen::Index>(degree));
  const cdouble lead = c.back();
  for (std::size_t i = 0; i + 1 < degree; ++i)
    companion(static_cast<Eigen::Index>(i + 1), static_cast<Eigen::Index>(i)) = 1.0;
  for (std::size_t i = 0; i < degree; ++i)
    companion(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(degree - 1)) =
        -c[first + i] / lead;

  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success)
    throw DomainError("polynomial_roots: eigenvalue solver failed to converge");
  for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i)
    roots.push_back(solver.eigenvalues()(i));
  return roots;
}

std::vector<cdouble> polynomial_roots(std::span<const double> coeffs_ascending) {
  std::vector<cdouble> c(coeffs_ascending.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = cdouble(coeffs_ascending[i], 0.0);
  return polynomial_roots(c);
}

std::vector<double> minphase_oracle_1d(std::span<const double> autocorr) {
  if (autocorr.empty() || autocorr.size() % 2 == 0)
    throw ShapeError("minphase oracle: autocorrelation must have odd length r(-K)..r(K)");
  const std::size_t len = autocorr.size();
  double top = 0.0;
  for (double v : autocorr) top = std::max(top, std::abs(v));
  if (top == 0.0) throw DomainError("minphase oracle: zero autocorrelation");
  for (std::size_t i = 0; i < len; ++i)
    if (std::abs(autocorr[i] - autocorr[len - 1 - i]) > 1e-12 * top)
      throw DomainError("minphase oracle: input is not even-symmetric");

  // strip zero outer lags; (0, 1, 0) reduces to (1)
  std::size_t lo = 0, hi = len - 1;
  while (lo < hi && autocorr[lo] == 0.0 && autocorr[hi] == 0.0) {
    ++lo;
    --hi;
  }
  const std::span<const double> r = autocorr.subspan(lo, hi - lo + 1);
  const std::size_t degree = (r.size() - 1) / 2;
  if (degree > static_cast<std::size_t>(kMaxDegree))
    throw DomainError("minphase oracle: degree exceeds cap");
  const double r0 = r[degree];
  if (!(r0 > 0.0)) throw DomainError("minphase oracle: r(0) must be positive");

  // positive definiteness: the spectrum R(e^{iw}) on a fine grid must be > 0
  {
    const std::int64_t grid = 8192;
    std::vector<double> padded(static_cast<std::size_t>(grid), 0.0);
    padded[0] = r0;
    for (std::size_t k = 1; k <= degree; ++k) {
      padded[k] = r[degree + k];
      padded[static_cast<std::size_t>(grid) - k] = r[degree - k];
    }
    const std::int64_t dims[1] = {grid};
    auto spec = fft::forward_real(std::span<const std::int64_t>(dims, 1), padded);
    double min_s = spec[0].real();
    for (const auto& z : spec) min_s = std::min(min_s, z.real());
    if (min_s < -1e-9 * top)
      throw DomainError("minphase oracle: spectrum has negative values, input not positive definite");
  }

  if (degree == 0) return {std::sqrt(r0)};

  const auto roots = polynomial_roots(std::span<const double>(r.data(), r.size()));
  std::vector<cdouble> inside;
  for (const auto& z : roots) {
    const double mod = std::abs(z);
    if (std::abs(mod - 1.0) < kUnitCircleTol)
      throw MarginalSpectrumError("minphase oracle: root on the unit circle, |z| = " +
                                  std::to_string(mod));
    if (mod < 1.0) inside.push_back(z);
  }
  if (inside.size() != degree)
    throw DomainError("minphase oracle: expected " + std::to_string(degree) +
                      " roots inside the unit circle, found " + std::to_string(inside.size()));
  // every inside root must have a reciprocal partner 1/conj(z)
  for (const auto& z : inside) {
    const cdouble want = 1.0 / std::conj(z);
    bool found = false;
    for (const auto& other : roots) {
      if (std::abs(other - want) <= kPairTol * std::abs(want) + kPairTol) {
        found = true;
        break;
      }
    }
    if (!found)
      throw DomainError("minphase oracle: unpaired root, input not a valid autocorrelation");
  }

  // monic causal factor from the inside roots
  std::vector<cdouble> a{cdouble(1.0, 0.0)};
  for (const auto& z : inside) {
    std::vector<cdouble> next(a.size() + 1, cdouble(0.0, 0.0));
    for (std::size_t i = 0; i < a.size(); ++i) {
      next[i] += a[i];
      next[i + 1] -= a[i] * z;
    }
    a = std::move(next);
  }
  double energy = 0.0;
  std::vector<double> factor(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    factor[i] = a[i].real();  // conjugate pairs make it real
    energy += factor[i] * factor[i];
  }
  const double gain = std::sqrt(r0 / energy);
  for (auto& v : factor) v *= gain;

  // consistency: reconvolved autocorrelation must match the input
  for (std::size_t lag = 0; lag <= degree; ++lag) {
    double acc = 0.0;
    for (std::size_t i = 0; i + lag < factor.size(); ++i) acc += factor[i] * factor[i + lag];
    if (std::abs(acc - r[degree + lag]) > 1e-8 * top)
      throw DomainError("minphase oracle: reconvolution mismatch at lag " + std::to_string(lag));
  }
  return factor;
}

namespace {

// pole of the one-axis geometric series plus its truncation zeros
PoleZeroSet axis_catalog(cdouble pole, std::int64_t samples) {
  PoleZeroSet set;
  set.poles.push_back({pole, 1});
  const double mod = std::abs(pole);
  const double phase = std::arg(pole);
  set.zeros.reserve(static_cast<std::size_t>(samples - 1));
  for (std::int64_t r = 1; r < samples; ++r) {
    const double theta = phase + 2.0 * std::numbers::pi * static_cast<double>(r) /
                                     static_cast<double>(samples);
    set.zeros.push_back({std::polar(mod, theta), 1});
  }
  return set;
}

cdouble space_pole(const PlaneWaveParams& p) {
  return std::polar(std::exp(-p.alpha * p.dx), p.wavenumber * p.dx);
}

cdouble time_pole(const PlaneWaveParams& p, WaveDirection direction) {
  if (direction == WaveDirection::Forward)
    return std::polar(std::exp(-p.beta * p.dt), -p.omega * p.dt);
  return std::polar(std::exp(p.beta * p.dt), p.omega * p.dt);
}

}  // namespace

AxisPoleZeros plane_wave_pz(const PlaneWaveParams& p, std::int64_t space_samples,
                            std::int64_t time_samples, WaveDirection direction) {
  if (space_samples <= 0 || time_samples <= 0)
    throw ShapeError("plane_wave_pz: sample counts must be positive");
  AxisPoleZeros out;
  out.space = axis_catalog(space_pole(p), space_samples);
  out.space.gain = p.amplitude;
  out.time = axis_catalog(time_pole(p, direction), time_samples);
  out.time.gain = 1.0;
  return out;
}

PoleZeroSet helical_pz(const PlaneWaveParams& p, std::int64_t space_samples,
                       std::int64_t time_samples, WaveDirection direction,
                       bool include_time_truncation_zeros) {
  if (space_samples <= 0 || time_samples <= 0)
    throw ShapeError("helical_pz: sample counts must be positive");
  const double m = static_cast<double>(space_samples);
  PoleZeroSet set;
  set.gain = p.amplitude;

  const cdouble zs = space_pole(p);
  set.poles.push_back({zs, 1});

  // each time-axis pole of modulus rho becomes M poles of modulus rho^(1/M)
  const cdouble zt = time_pole(p, direction);
  const double pole_mod = std::pow(std::abs(zt), 1.0 / m);
  const double pole_phase = std::arg(zt);
  for (std::int64_t j = 0; j < space_samples; ++j) {
    const double theta =
        (pole_phase + 2.0 * std::numbers::pi * static_cast<double>(j)) / m;
    set.poles.push_back({std::polar(pole_mod, theta), 1});
  }

  // space-truncation zeros z^M = zs^M, the image cancelling the space pole dropped
  const double zs_mod = std::abs(zs);
  const double zs_phase = std::arg(zs);
  for (std::int64_t r = 1; r < space_samples; ++r) {
    const double theta = zs_phase + 2.0 * std::numbers::pi * static_cast<double>(r) / m;
    set.zeros.push_back({std::polar(zs_mod, theta), 1});
  }

  if (include_time_truncation_zeros) {
    // z^{MN} = zt^N, skipping the M images that cancel the time poles
    const std::int64_t mn = space_samples * time_samples;
    const double n = static_cast<double>(time_samples);
    for (std::int64_t q = 0; q < mn; ++q) {
      if (q % time_samples == 0) continue;
      const double theta =
          (pole_phase + 2.0 * std::numbers::pi * static_cast<double>(q) / n) / m;
      set.zeros.push_back({std::polar(pole_mod, theta), 1});
    }
  }
  return set;
}

std::vector<cdouble> separable_zero_map(cdouble alpha, std::int64_t nx) {
  if (nx < 1) throw ShapeError("separable_zero_map: nx must be >= 1");
  std::vector<cdouble> out;
  out.reserve(static_cast<std::size_t>(nx));
  const double mod = std::pow(std::abs(alpha), 1.0 / static_cast<double>(nx));
  const double phase = std::arg(alpha);
  for (std::int64_t k = 0; k < nx; ++k) {
    const double theta =
        (phase + 2.0 * std::numbers::pi * static_cast<double>(k)) / static_cast<double>(nx);
    out.push_back(std::polar(mod, theta));
  }
  return out;
}

}  // namespace helix
