#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>

// Data-parallel kernels behind the transform pipeline. Each pointwise map has
// an OpenMP path and a plain-loop reference in kernels::serial; the public
// functions dispatch at runtime. Reductions always run the fixed-block
// algorithm (partials accumulated in block order): their results do not
// depend on thread count or on whether OpenMP kicked in.

namespace helix::kernels {

using cdouble = std::complex<double>;

inline constexpr std::size_t kBlock = 4096;
inline constexpr std::size_t kParallelMin = 1 << 14;

void set_parallel(bool on);
bool parallel_enabled();
bool use_parallel(std::size_t n);

// pointwise maps
void magnitude_squared(std::span<const cdouble> in, std::span<double> out);
void widen(std::span<const double> in, std::span<cdouble> out);
void real_part(std::span<const cdouble> in, std::span<double> out);
void complex_exp(std::span<cdouble> v);
void multiply(std::span<double> a, std::span<const double> b);
void complex_multiply(std::span<cdouble> a, std::span<const cdouble> b);
void scale(std::span<double> v, double s);
void scale(std::span<cdouble> v, double s);
// clamps v below at floor_value, returns number of clamped entries
std::int64_t floor_below(std::span<double> v, double floor_value);
void log_inplace(std::span<double> v);

// blocked deterministic reductions
double sum(std::span<const double> v);
double sum_squares(std::span<const double> v);
double dot(std::span<const double> a, std::span<const double> b);
double sum_squared_diff(std::span<const double> a, std::span<const double> b);
double max_abs(std::span<const double> v);
double min_value(std::span<const double> v);
double max_value(std::span<const double> v);
// sum of im^2 and of |z|^2 in one pass; used for imaginary-residue reports
void imag_energy(std::span<const cdouble> v, double* imag_sq, double* total_sq);
bool all_finite(std::span<const cdouble> v);

// Plain-loop references used by tests and the benchmark target.
namespace serial {
void magnitude_squared(std::span<const cdouble> in, std::span<double> out);
void complex_exp(std::span<cdouble> v);
void multiply(std::span<double> a, std::span<const double> b);
std::int64_t floor_below(std::span<double> v, double floor_value);
void log_inplace(std::span<double> v);
double sum(std::span<const double> v);
double sum_squares(std::span<const double> v);
double dot(std::span<const double> a, std::span<const double> b);
double sum_squared_diff(std::span<const double> a, std::span<const double> b);
double max_abs(std::span<const double> v);
}  // namespace serial

}  // namespace helix::kernels
