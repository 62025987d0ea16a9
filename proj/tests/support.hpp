#pragma once

// Shared test helpers: a brute-force DFT oracle independent of the FFT
// wrapper, random minimum-phase sequence generators, and small metric
// helpers. Everything here is test-only.

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>
#include <span>
#include <vector>

#include "helix/field.hpp"

namespace testsupport {

using cdouble = std::complex<double>;

// O(n^2) per axis reference DFT over the canonical layout (axis 0 fastest)
inline std::vector<cdouble> naive_dft(std::span<const std::int64_t> dims,
                                      std::span<const cdouble> in, int sign) {
  std::vector<cdouble> cur(in.begin(), in.end());
  const std::int64_t total = static_cast<std::int64_t>(cur.size());
  std::int64_t stride = 1;
  for (std::size_t axis = 0; axis < dims.size(); ++axis) {
    const std::int64_t n = dims[axis];
    std::vector<cdouble> next(cur.size());
    for (std::int64_t base = 0; base < total; ++base) {
      const std::int64_t along = (base / stride) % n;
      const std::int64_t rest = base - along * stride;
      cdouble acc(0.0, 0.0);
      for (std::int64_t j = 0; j < n; ++j) {
        const double angle = sign * 2.0 * std::numbers::pi *
                             static_cast<double>(along * j) / static_cast<double>(n);
        acc += cur[static_cast<std::size_t>(rest + j * stride)] *
               cdouble(std::cos(angle), std::sin(angle));
      }
      next[static_cast<std::size_t>(base)] = acc;
    }
    cur = std::move(next);
    stride *= n;
  }
  return cur;
}

inline std::vector<cdouble> naive_dft_forward(std::span<const std::int64_t> dims,
                                              std::span<const double> in) {
  std::vector<cdouble> c(in.size());
  for (std::size_t i = 0; i < in.size(); ++i) c[i] = cdouble(in[i], 0.0);
  return naive_dft(dims, c, -1);
}

// random real minimum-phase coefficients a(0..degree), a(0) = 1, roots with
// modulus <= max_modulus
inline std::vector<double> random_minphase(std::mt19937_64& eng, int degree,
                                           double max_modulus = 0.75) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<cdouble> roots;
  int remaining = degree;
  while (remaining > 0) {
    if (remaining >= 2 && unit(eng) < 0.7) {
      const double mod = 0.1 + (max_modulus - 0.1) * unit(eng);
      const double phase = std::numbers::pi * unit(eng);
      roots.push_back(std::polar(mod, phase));
      roots.push_back(std::polar(mod, -phase));
      remaining -= 2;
    } else {
      const double mod = 0.1 + (max_modulus - 0.1) * unit(eng);
      roots.emplace_back(unit(eng) < 0.5 ? -mod : mod, 0.0);
      remaining -= 1;
    }
  }
  std::vector<cdouble> a{cdouble(1.0, 0.0)};
  for (const auto& z : roots) {
    std::vector<cdouble> next(a.size() + 1, cdouble(0.0, 0.0));
    for (std::size_t i = 0; i < a.size(); ++i) {
      next[i] += a[i];
      next[i + 1] -= a[i] * z;
    }
    a = std::move(next);
  }
  std::vector<double> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i].real();
  return out;
}

// full even-symmetric autocorrelation r(-K)..r(K) of a
inline std::vector<double> autocorrelation_of(std::span<const double> a) {
  const std::size_t k = a.size() - 1;
  std::vector<double> r(2 * k + 1, 0.0);
  for (std::size_t lag = 0; lag <= k; ++lag) {
    double acc = 0.0;
    for (std::size_t i = 0; i + lag < a.size(); ++i) acc += a[i] * a[i + lag];
    r[k + lag] = acc;
    r[k - lag] = acc;
  }
  return r;
}

// 1-D field with `taps` placed at the start of an N-point circular buffer
inline helix::Field embed_1d(std::span<const double> taps, std::int64_t n) {
  helix::Field f = helix::zeros({n});
  for (std::size_t i = 0; i < taps.size(); ++i) f.data[i] = taps[i];
  return f;
}

// circular embedding of a symmetric autocorrelation r(-K)..r(K)
inline helix::Field embed_autocorr_1d(std::span<const double> r, std::int64_t n) {
  const std::int64_t k = static_cast<std::int64_t>((r.size() - 1) / 2);
  helix::Field f = helix::zeros({n});
  f.data[0] = r[static_cast<std::size_t>(k)];
  for (std::int64_t lag = 1; lag <= k; ++lag) {
    f.data[static_cast<std::size_t>(lag)] = r[static_cast<std::size_t>(k + lag)];
    f.data[static_cast<std::size_t>(n - lag)] = r[static_cast<std::size_t>(k - lag)];
  }
  return f;
}

// separable outer product u (x) v as a 2-D field (u along axis 0)
inline helix::Field outer_2d(std::span<const double> u, std::int64_t m,
                             std::span<const double> v, std::int64_t n) {
  helix::Field f = helix::zeros({m, n});
  for (std::size_t j = 0; j < v.size(); ++j)
    for (std::size_t i = 0; i < u.size(); ++i)
      f.data[i + static_cast<std::size_t>(m) * j] = u[i] * v[j];
  return f;
}

inline double rel_l2(std::span<const double> got, std::span<const double> want) {
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < got.size(); ++i) {
    const double d = got[i] - want[i];
    num += d * d;
    den += want[i] * want[i];
  }
  return den > 0.0 ? std::sqrt(num / den) : std::sqrt(num);
}

// least-squares scale of `other` onto `reference`, then relative L2 error
inline double rel_l2_up_to_scale(std::span<const double> got, std::span<const double> want) {
  double gw = 0.0, ww = 0.0;
  for (std::size_t i = 0; i < got.size(); ++i) {
    gw += got[i] * want[i];
    ww += want[i] * want[i];
  }
  const double c = gw / ww;
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < got.size(); ++i) {
    const double d = got[i] - c * want[i];
    num += d * d;
    den += c * want[i] * c * want[i];
  }
  return den > 0.0 ? std::sqrt(num / den) : std::sqrt(num);
}

}  // namespace testsupport
