#include "helix/fft.hpp"

#include <fftw3.h>

#include <limits>
#include <mutex>

#include "helix/errors.hpp"
#include "helix/kernels.hpp"

namespace helix::fft {

namespace {

std::mutex g_planner_mutex;  // FFTW planner is not thread-safe

void execute(std::span<const std::int64_t> dims, cdouble* data, int sign) {
  if (dims.empty() || dims.size() > 3) throw ShapeError("fft: rank must be 1..3");
  int n[3];
  std::int64_t total = 1;
  // canonical layout has axis 0 fastest; FFTW is row-major (last axis fastest)
  for (std::size_t a = 0; a < dims.size(); ++a) {
    const std::int64_t d = dims[dims.size() - 1 - a];
    if (d <= 0 || d > std::numeric_limits<int>::max())
      throw ShapeError("fft: axis length out of range");
    n[a] = static_cast<int>(d);
    total *= d;
  }
  auto* raw = reinterpret_cast<fftw_complex*>(data);
  fftw_plan plan;
  {
    std::lock_guard<std::mutex> lock(g_planner_mutex);
    plan = fftw_plan_dft(static_cast<int>(dims.size()), n, raw, raw, sign,
                         FFTW_ESTIMATE);
  }
  if (!plan) throw Error("fft: plan creation failed");
  fftw_execute(plan);
  {
    std::lock_guard<std::mutex> lock(g_planner_mutex);
    fftw_destroy_plan(plan);
  }
  if (sign == FFTW_BACKWARD)
    kernels::scale(std::span<cdouble>(data, static_cast<std::size_t>(total)),
                   1.0 / static_cast<double>(total));
}

}  // namespace

void forward(std::span<const std::int64_t> dims, cdouble* data) {
  execute(dims, data, FFTW_FORWARD);
}

void inverse(std::span<const std::int64_t> dims, cdouble* data) {
  execute(dims, data, FFTW_BACKWARD);
}

std::vector<cdouble> forward_real(std::span<const std::int64_t> dims,
                                  std::span<const double> data) {
  std::vector<cdouble> out(data.size());
  kernels::widen(data, out);
  forward(dims, out.data());
  return out;
}

}  // namespace helix::fft
