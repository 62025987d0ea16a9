#include "helix/kernels.hpp"

#include <omp.h>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <vector>

#include "helix/errors.hpp"

namespace helix::kernels {

namespace {
std::atomic<bool> g_parallel{true};

inline std::size_t block_count(std::size_t n) { return (n + kBlock - 1) / kBlock; }
}  // namespace

void set_parallel(bool on) { g_parallel.store(on); }
bool parallel_enabled() { return g_parallel.load(); }

bool use_parallel(std::size_t n) {
  return parallel_enabled() && n >= kParallelMin && omp_in_parallel() == 0;
}

void magnitude_squared(std::span<const cdouble> in, std::span<double> out) {
  if (in.size() != out.size()) throw ShapeError("magnitude_squared: size mismatch");
  const std::int64_t n = static_cast<std::int64_t>(in.size());
  if (use_parallel(in.size())) {
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < n; ++i)
      out[i] = in[i].real() * in[i].real() + in[i].imag() * in[i].imag();
  } else {
    for (std::int64_t i = 0; i < n; ++i)
      out[i] = in[i].real() * in[i].real() + in[i].imag() * in[i].imag();
  }
}

void widen(std::span<const double> in, std::span<cdouble> out) {
  if (in.size() != out.size()) throw ShapeError("widen: size mismatch");
  const std::int64_t n = static_cast<std::int64_t>(in.size());
  if (use_parallel(in.size())) {
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < n; ++i) out[i] = cdouble(in[i], 0.0);
  } else {
    for (std::int64_t i = 0; i < n; ++i) out[i] = cdouble(in[i], 0.0);
  }
}

void real_part(std::span<const cdouble> in, std::span<double> out) {
  if (in.size() != out.size()) throw ShapeError("real_part: size mismatch");
  const std::int64_t n = static_cast<std::int64_t>(in.size());
  if (use_parallel(in.size())) {
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < n; ++i) out[i] = in[i].real();
  } else {
    for (std::int64_t i = 0; i < n; ++i) out[i] = in[i].real();
  }
}

void complex_exp(std::span<cdouble> v) {
  const std::int64_t n = static_cast<std::int64_t>(v.size());
  if (use_parallel(v.size())) {
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < n; ++i) v[i] = std::exp(v[i]);
  } else {
    for (std::int64_t i = 0; i < n; ++i) v[i] = std::exp(v[i]);
  }
}

void multiply(std::span<double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw ShapeError("multiply: size mismatch");
  const std::int64_t n = static_cast<std::int64_t>(a.size());
  if (use_parallel(a.size())) {
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < n; ++i) a[i] *= b[i];
  } else {
    for (std::int64_t i = 0; i < n; ++i) a[i] *= b[i];
  }
}

void complex_multiply(std::span<cdouble> a, std::span<const cdouble> b) {
  if (a.size() != b.size()) throw ShapeError("complex_multiply: size mismatch");
  const std::int64_t n = static_cast<std::int64_t>(a.size());
  if (use_parallel(a.size())) {
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < n; ++i) a[i] *= b[i];
  } else {
    for (std::int64_t i = 0; i < n; ++i) a[i] *= b[i];
  }
}

void scale(std::span<double> v, double s) {
  const std::int64_t n = static_cast<std::int64_t>(v.size());
  if (use_parallel(v.size())) {
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < n; ++i) v[i] *= s;
  } else {
    for (std::int64_t i = 0; i < n; ++i) v[i] *= s;
  }
}

void scale(std::span<cdouble> v, double s) {
  const std::int64_t n = static_cast<std::int64_t>(v.size());
  if (use_parallel(v.size())) {
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < n; ++i) v[i] *= s;
  } else {
    for (std::int64_t i = 0; i < n; ++i) v[i] *= s;
  }
}

std::int64_t floor_below(std::span<double> v, double floor_value) {
  const std::int64_t n = static_cast<std::int64_t>(v.size());
  std::int64_t clamped = 0;
  if (use_parallel(v.size())) {
#pragma omp parallel for schedule(static) reduction(+ : clamped)
    for (std::int64_t i = 0; i < n; ++i) {
      if (v[i] < floor_value) {
        v[i] = floor_value;
        ++clamped;
      }
    }
  } else {
    for (std::int64_t i = 0; i < n; ++i) {
      if (v[i] < floor_value) {
        v[i] = floor_value;
        ++clamped;
      }
    }
  }
  return clamped;
}

void log_inplace(std::span<double> v) {
  const std::int64_t n = static_cast<std::int64_t>(v.size());
  if (use_parallel(v.size())) {
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < n; ++i) v[i] = std::log(v[i]);
  } else {
    for (std::int64_t i = 0; i < n; ++i) v[i] = std::log(v[i]);
  }
}

namespace {

// Blocked reduction: per-block partials (plain loops) accumulated in block
// order. The grouping is fixed by kBlock, so the result is independent of the
// number of threads and identical to the serial-blocked evaluation.
template <typename PartialFn>
double blocked_reduce_sum(std::size_t n, PartialFn&& partial) {
  const std::size_t nb = block_count(n);
  if (nb == 0) return 0.0;
  std::vector<double> parts(nb);
  const std::int64_t nbi = static_cast<std::int64_t>(nb);
  if (use_parallel(n)) {
#pragma omp parallel for schedule(static)
    for (std::int64_t b = 0; b < nbi; ++b)
      parts[b] = partial(static_cast<std::size_t>(b) * kBlock,
                         std::min(n, (static_cast<std::size_t>(b) + 1) * kBlock));
  } else {
    for (std::int64_t b = 0; b < nbi; ++b)
      parts[b] = partial(static_cast<std::size_t>(b) * kBlock,
                         std::min(n, (static_cast<std::size_t>(b) + 1) * kBlock));
  }
  double acc = 0.0;
  for (double p : parts) acc += p;
  return acc;
}

}  // namespace

double sum(std::span<const double> v) {
  return blocked_reduce_sum(v.size(), [&](std::size_t lo, std::size_t hi) {
    double s = 0.0;
    for (std::size_t i = lo; i < hi; ++i) s += v[i];
    return s;
  });
}

double sum_squares(std::span<const double> v) {
  return blocked_reduce_sum(v.size(), [&](std::size_t lo, std::size_t hi) {
    double s = 0.0;
    for (std::size_t i = lo; i < hi; ++i) s += v[i] * v[i];
    return s;
  });
}

double dot(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw ShapeError("dot: size mismatch");
  return blocked_reduce_sum(a.size(), [&](std::size_t lo, std::size_t hi) {
    double s = 0.0;
    for (std::size_t i = lo; i < hi; ++i) s += a[i] * b[i];
    return s;
  });
}

double sum_squared_diff(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw ShapeError("sum_squared_diff: size mismatch");
  return blocked_reduce_sum(a.size(), [&](std::size_t lo, std::size_t hi) {
    double s = 0.0;
    for (std::size_t i = lo; i < hi; ++i) {
      const double d = a[i] - b[i];
      s += d * d;
    }
    return s;
  });
}

double max_abs(std::span<const double> v) {
  // max is exactly associative, plain omp reduction is already deterministic
  const std::int64_t n = static_cast<std::int64_t>(v.size());
  double m = 0.0;
  if (use_parallel(v.size())) {
#pragma omp parallel for schedule(static) reduction(max : m)
    for (std::int64_t i = 0; i < n; ++i) m = std::max(m, std::abs(v[i]));
  } else {
    for (std::int64_t i = 0; i < n; ++i) m = std::max(m, std::abs(v[i]));
  }
  return m;
}

double min_value(std::span<const double> v) {
  if (v.empty()) throw ShapeError("min_value: empty input");
  const std::int64_t n = static_cast<std::int64_t>(v.size());
  double m = v[0];
  if (use_parallel(v.size())) {
#pragma omp parallel for schedule(static) reduction(min : m)
    for (std::int64_t i = 0; i < n; ++i) m = std::min(m, v[i]);
  } else {
    for (std::int64_t i = 0; i < n; ++i) m = std::min(m, v[i]);
  }
  return m;
}

double max_value(std::span<const double> v) {
  if (v.empty()) throw ShapeError("max_value: empty input");
  const std::int64_t n = static_cast<std::int64_t>(v.size());
  double m = v[0];
  if (use_parallel(v.size())) {
#pragma omp parallel for schedule(static) reduction(max : m)
    for (std::int64_t i = 0; i < n; ++i) m = std::max(m, v[i]);
  } else {
    for (std::int64_t i = 0; i < n; ++i) m = std::max(m, v[i]);
  }
  return m;
}

void imag_energy(std::span<const cdouble> v, double* imag_sq, double* total_sq) {
  *imag_sq = blocked_reduce_sum(v.size(), [&](std::size_t lo, std::size_t hi) {
    double s = 0.0;
    for (std::size_t i = lo; i < hi; ++i) s += v[i].imag() * v[i].imag();
    return s;
  });
  *total_sq = blocked_reduce_sum(v.size(), [&](std::size_t lo, std::size_t hi) {
    double s = 0.0;
    for (std::size_t i = lo; i < hi; ++i) s += std::norm(v[i]);
    return s;
  });
}

bool all_finite(std::span<const cdouble> v) {
  const std::int64_t n = static_cast<std::int64_t>(v.size());
  bool ok = true;
  if (use_parallel(v.size())) {
#pragma omp parallel for schedule(static) reduction(&& : ok)
    for (std::int64_t i = 0; i < n; ++i)
      ok = ok && std::isfinite(v[i].real()) && std::isfinite(v[i].imag());
  } else {
    for (std::int64_t i = 0; i < n; ++i) {
      if (!std::isfinite(v[i].real()) || !std::isfinite(v[i].imag())) return false;
    }
  }
  return ok;
}

namespace serial {

void magnitude_squared(std::span<const cdouble> in, std::span<double> out) {
  for (std::size_t i = 0; i < in.size(); ++i) out[i] = std::norm(in[i]);
}

void complex_exp(std::span<cdouble> v) {
  for (auto& z : v) z = std::exp(z);
}

void multiply(std::span<double> a, std::span<const double> b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] *= b[i];
}

std::int64_t floor_below(std::span<double> v, double floor_value) {
  std::int64_t clamped = 0;
  for (auto& x : v) {
    if (x < floor_value) {
      x = floor_value;
      ++clamped;
    }
  }
  return clamped;
}

void log_inplace(std::span<double> v) {
  for (auto& x : v) x = std::log(x);
}

double sum(std::span<const double> v) {
  double s = 0.0;
  for (double x : v) s += x;
  return s;
}

double sum_squares(std::span<const double> v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return s;
}

double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double sum_squared_diff(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    s += d * d;
  }
  return s;
}

double max_abs(std::span<const double> v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

}  // namespace serial

}  // namespace helix::kernels
