#include "helix/cepstral.hpp"

#include <omp.h>

#include <cmath>
#include <complex>
#include <string>

#include "helix/errors.hpp"
#include "helix/fft.hpp"
#include "helix/kernels.hpp"

namespace helix {

using kernels::cdouble;

Region Region::causal1d() { return Region{RegionKind::Causal1D, {1, 1, 1}, 2}; }
Region Region::upper_nshp() { return Region{RegionKind::UpperNSHP, {1, 1, 1}, 2}; }
Region Region::lower_nshp() { return Region{RegionKind::LowerNSHP, {1, 1, 1}, 2}; }
Region Region::upper_nshs3d() { return Region{RegionKind::UpperNSHS3D, {1, 1, 1}, 2}; }
Region Region::lower_nshs3d() { return Region{RegionKind::LowerNSHS3D, {1, 1, 1}, 2}; }

Region Region::quadrant(std::span<const int> axis_signs) {
  if (axis_signs.size() < 2 || axis_signs.size() > 3)
    throw ShapeError("quadrant region: arity must be 2 or 3");
  Region r;
  r.kind = RegionKind::Quadrant;
  r.quadrant_arity = static_cast<int>(axis_signs.size());
  for (std::size_t a = 0; a < axis_signs.size(); ++a) {
    if (axis_signs[a] != 1 && axis_signs[a] != -1)
      throw ShapeError("quadrant region: signs must be +1 or -1");
    r.signs[a] = static_cast<std::int8_t>(axis_signs[a]);
  }
  return r;
}

int Region::arity() const {
  switch (kind) {
    case RegionKind::Causal1D: return 1;
    case RegionKind::Quadrant: return quadrant_arity;
    case RegionKind::UpperNSHP:
    case RegionKind::LowerNSHP: return 2;
    case RegionKind::UpperNSHS3D:
    case RegionKind::LowerNSHS3D: return 3;
  }
  return 0;
}

Region Region::mirror() const {
  Region m = *this;
  switch (kind) {
    case RegionKind::Causal1D: break;  // handled by sign flip below
    case RegionKind::UpperNSHP: m.kind = RegionKind::LowerNSHP; return m;
    case RegionKind::LowerNSHP: m.kind = RegionKind::UpperNSHP; return m;
    case RegionKind::UpperNSHS3D: m.kind = RegionKind::LowerNSHS3D; return m;
    case RegionKind::LowerNSHS3D: m.kind = RegionKind::UpperNSHS3D; return m;
    case RegionKind::Quadrant:
      for (int a = 0; a < quadrant_arity; ++a)
        m.signs[static_cast<std::size_t>(a)] =
            static_cast<std::int8_t>(-signs[static_cast<std::size_t>(a)]);
      return m;
  }
  // Causal1D mirror is the anticausal half line; represent it as a quadrant
  // with a single negative axis.
  m.kind = RegionKind::Quadrant;
  m.quadrant_arity = 1;
  m.signs = {-1, 1, 1};
  return m;
}

namespace {

bool lex_nonneg(std::span<const std::int64_t> s) {
  for (std::size_t a = s.size(); a-- > 0;) {
    if (s[a] > 0) return true;
    if (s[a] < 0) return false;
  }
  return true;  // origin
}

}  // namespace

bool Region::contains(std::span<const std::int64_t> s) const {
  switch (kind) {
    case RegionKind::Causal1D:
      return s[0] >= 0;
    case RegionKind::UpperNSHP:
    case RegionKind::UpperNSHS3D:
      return lex_nonneg(s);
    case RegionKind::LowerNSHP:
    case RegionKind::LowerNSHS3D: {
      std::int64_t neg[3];
      for (std::size_t a = 0; a < s.size(); ++a) neg[a] = -s[a];
      return lex_nonneg(std::span<const std::int64_t>(neg, s.size()));
    }
    case RegionKind::Quadrant:
      for (std::size_t a = 0; a < s.size(); ++a)
        if (signs[a] * s[a] < 0) return false;
      return true;
  }
  return false;
}

const char* to_string(RegionKind kind) {
  switch (kind) {
    case RegionKind::Causal1D: return "causal1d";
    case RegionKind::Quadrant: return "quadrant";
    case RegionKind::UpperNSHP: return "upper-nshp";
    case RegionKind::LowerNSHP: return "lower-nshp";
    case RegionKind::UpperNSHS3D: return "upper-nshs";
    case RegionKind::LowerNSHS3D: return "lower-nshs";
  }
  return "?";
}

PowerSpectrum power_spectrum(const Field& f) {
  validate(f);
  auto spectrum = fft::forward_real(f.dims, f.data);
  PowerSpectrum s;
  s.dims = f.dims;
  s.values.resize(f.data.size());
  kernels::magnitude_squared(spectrum, s.values);
  return s;
}

PowerSpectrum autocorrelation_spectrum(const Field& r) {
  validate(r);
  auto spectrum = fft::forward_real(r.dims, r.data);
  PowerSpectrum s;
  s.dims = r.dims;
  s.values.resize(r.data.size());
  kernels::real_part(spectrum, s.values);
  const double top = kernels::max_value(s.values);
  if (!(top > 0.0)) throw DomainError("autocorrelation spectrum: not positive definite");
  const double tol = 1e-9 * top;
  for (auto& v : s.values) {
    if (v < -tol)
      throw DomainError("autocorrelation spectrum: negative value " + std::to_string(v) +
                        ", input is not positive definite");
    if (v < 0.0) v = 0.0;
  }
  return s;
}

Cepstrum cepstrum_of_spectrum(const PowerSpectrum& s, double floor_rel) {
  if (floor_rel < 0.0) throw DomainError("cepstrum: floor must be >= 0");
  const double top = s.values.empty() ? 0.0 : kernels::max_value(s.values);
  if (!(top > 0.0))
    throw DomainError("cepstrum: degenerate spectrum, logarithm undefined everywhere");
  std::vector<double> logs(s.values.begin(), s.values.end());
  const double floor_value = floor_rel * top;
  const std::int64_t floored = kernels::floor_below(logs, floor_value);
  kernels::log_inplace(logs);

  std::vector<cdouble> work(logs.size());
  kernels::widen(logs, work);
  fft::inverse(s.dims, work.data());

  Cepstrum c;
  c.dims = s.dims;
  c.values.resize(work.size());
  kernels::real_part(work, c.values);
  c.floor_value = floored > 0 ? floor_value : 0.0;
  c.floored_bins = floored;
  return c;
}

namespace {

// Signed representative(s) of an aliased index: i in (N/2, N) reads as i - N;
// the Nyquist index on an even axis reads as both +N/2 and -N/2.
struct SignedReps {
  std::int64_t rep[2];
  int count;
};

SignedReps signed_reps(std::int64_t i, std::int64_t n) {
  if (n % 2 == 0 && i == n / 2) return {{n / 2, -n / 2}, 2};
  if (i <= n / 2) return {{i, 0}, 1};
  return {{i - n, 0}, 1};
}

}  // namespace

ProjectionWindow region_window(const Region& region, std::span<const std::int64_t> dims) {
  const int d = static_cast<int>(dims.size());
  if (d < 1 || d > 3) throw ShapeError("region_window: dims arity must be 1..3");
  if (region.arity() != d)
    throw ShapeError(std::string("region_window: region ") + to_string(region.kind) +
                     " has arity " + std::to_string(region.arity()) +
                     ", dims have arity " + std::to_string(d));

  ProjectionWindow w;
  w.dims.assign(dims.begin(), dims.end());
  const std::int64_t total = element_count(dims);
  w.weights.resize(static_cast<std::size_t>(total));

  const std::int64_t n0 = dims[0];
  const std::int64_t n1 = d > 1 ? dims[1] : 1;

#pragma omp parallel for schedule(static) if (total >= static_cast<std::int64_t>(kernels::kParallelMin) && kernels::parallel_enabled())
  for (std::int64_t cell = 0; cell < total; ++cell) {
    std::int64_t idx[3] = {cell % n0, (cell / n0) % n1, cell / (n0 * n1)};
    SignedReps reps[3];
    int rep_total = 1;
    for (int a = 0; a < d; ++a) {
      reps[a] = signed_reps(idx[a], dims[static_cast<std::size_t>(a)]);
      rep_total *= reps[a].count;
    }
    double acc = 0.0;
    for (int r = 0; r < rep_total; ++r) {
      std::int64_t s[3] = {0, 0, 0};
      std::int64_t neg[3] = {0, 0, 0};
      int rr = r;
      for (int a = 0; a < d; ++a) {
        s[a] = reps[a].rep[rr % reps[a].count];
        neg[a] = -s[a];
        rr /= reps[a].count;
      }
      const bool in = region.contains(std::span<const std::int64_t>(s, static_cast<std::size_t>(d)));
      const bool in_mirror =
          region.contains(std::span<const std::int64_t>(neg, static_cast<std::size_t>(d)));
      acc += 0.5 * (1.0 + static_cast<double>(in) - static_cast<double>(in_mirror));
    }
    w.weights[static_cast<std::size_t>(cell)] = acc / static_cast<double>(rep_total);
  }
  return w;
}

Cepstrum project(const Cepstrum& c, const ProjectionWindow& w) {
  if (c.dims != w.dims) throw ShapeError("project: cepstrum/window shape mismatch");
  Cepstrum out = c;
  kernels::multiply(out.values, w.weights);
  return out;
}

InverseHomomorphic inverse_homomorphic(const Cepstrum& c) {
  std::vector<cdouble> work(c.values.size());
  kernels::widen(c.values, work);
  fft::forward(c.dims, work.data());
  kernels::complex_exp(work);
  if (!kernels::all_finite(work))
    throw DomainError("inverse homomorphic transform: exp overflow, cepstral values too large");
  fft::inverse(c.dims, work.data());

  InverseHomomorphic out;
  double imag_sq = 0.0, total_sq = 0.0;
  kernels::imag_energy(work, &imag_sq, &total_sq);
  out.imag_residue = total_sq > 0.0 ? std::sqrt(imag_sq / total_sq) : 0.0;
  out.field = zeros(c.dims);
  kernels::real_part(work, out.field.data);
  return out;
}

Cepstrum complex_cepstrum(const Field& f) {
  validate(f);
  auto spectrum = fft::forward_real(f.dims, f.data);
  const std::int64_t n = static_cast<std::int64_t>(spectrum.size());
#pragma omp parallel for schedule(static) if (n >= static_cast<std::int64_t>(kernels::kParallelMin) && kernels::parallel_enabled())
  for (std::int64_t i = 0; i < n; ++i) {
    if (spectrum[static_cast<std::size_t>(i)] == cdouble(0.0, 0.0))
      spectrum[static_cast<std::size_t>(i)] = cdouble(1e-300, 0.0);
    spectrum[static_cast<std::size_t>(i)] = std::log(spectrum[static_cast<std::size_t>(i)]);
  }
  fft::inverse(f.dims, spectrum.data());
  Cepstrum c;
  c.dims = f.dims;
  c.values.resize(spectrum.size());
  kernels::real_part(spectrum, c.values);
  return c;
}

}  // namespace helix
