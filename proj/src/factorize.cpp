#include "helix/factorize.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <utility>

#include "helix/errors.hpp"
#include "helix/fft.hpp"
#include "helix/kernels.hpp"

namespace helix {

namespace {

PowerSpectrum spectrum_of(const Field& input, SpectralInput kind) {
  return kind == SpectralInput::Data ? power_spectrum(input)
                                     : autocorrelation_spectrum(input);
}

// |DFT(factor)|^2 against the raw spectrum, relative L-infinity
double magnitude_residual(const Field& factor, const PowerSpectrum& raw) {
  const PowerSpectrum achieved = power_spectrum(factor);
  double worst = 0.0;
  for (std::size_t i = 0; i < raw.values.size(); ++i) {
    const double denom = std::max(raw.values[i], 1e-300);
    worst = std::max(worst, std::abs(achieved.values[i] - raw.values[i]) / denom);
  }
  return worst;
}

// energy fraction of the factor's complex cepstrum on mirror-interior cells
double causality_residual(const Field& factor, const ProjectionWindow& window) {
  const Cepstrum recomputed = complex_cepstrum(factor);
  double mirror_sq = 0.0, total_sq = 0.0;
  for (std::size_t i = 0; i < recomputed.values.size(); ++i) {
    const double v = recomputed.values[i];
    total_sq += v * v;
    if (window.weights[i] == 0.0) mirror_sq += v * v;
  }
  return total_sq > 0.0 ? mirror_sq / total_sq : 0.0;
}

FactorizationResult run_pipeline(const Field& domain_input, const Region& region,
                                 const FactorizeOptions& opt) {
  const PowerSpectrum raw = spectrum_of(domain_input, opt.input);
  const ProjectionWindow window = region_window(region, raw.dims);
  Cepstrum cep = cepstrum_of_spectrum(raw, opt.floor_rel);
  const double floor_value = cep.floor_value;
  const std::int64_t floored = cep.floored_bins;
  Cepstrum projected = project(cep, window);

  InverseHomomorphic inv = inverse_homomorphic(projected);
  inv.field.steps = domain_input.steps;

  FactorizationResult result;
  result.factor = std::move(inv.field);
  result.cepstrum_used = std::move(projected);
  result.region = region;
  result.floor_value = floor_value;
  result.floored_bins = floored;
  result.imag_residue = inv.imag_residue;
  if (opt.diagnostics) {
    result.magnitude_residual = magnitude_residual(result.factor, raw);
    result.causality_residual = causality_residual(result.factor, window);
  }
  return result;
}

}  // namespace

FactorizationResult factorize_nd(const Field& input, const Region& region,
                                 const FactorizeOptions& opt) {
  validate(input);
  if (region.arity() != static_cast<int>(input.dims.size()))
    throw ShapeError("factorize_nd: region arity does not match field dimension");
  FactorizationResult result = run_pipeline(input, region, opt);
  result.order = column_wise_order(static_cast<int>(input.dims.size()));
  result.helical = false;
  return result;
}

FactorizationResult factorize_helical(const Field& input, const HelicalOrder& order,
                                      const FactorizeOptions& opt) {
  validate(input);
  validate(order, static_cast<int>(input.dims.size()));

  const HelicalVector vec = helical_map(input, order);
  Field line = make_field({static_cast<std::int64_t>(vec.data.size())}, {1.0}, vec.data);
  FactorizationResult result = run_pipeline(line, Region::causal1d(), opt);

  HelicalVector factor_vec;
  factor_vec.data = std::move(result.factor.data);
  factor_vec.dims = input.dims;
  factor_vec.steps = input.steps;
  factor_vec.order = order;
  result.factor = helical_unmap(factor_vec);
  result.order = order;
  result.helical = true;
  return result;
}

EquivalenceMetrics compare(const Field& a, const Field& b, const HelicalOrder& order) {
  validate(a);
  validate(b);
  if (a.dims != b.dims) throw ShapeError("compare: field dims differ");
  std::vector<double> ha(a.data.size()), hb(b.data.size());
  helical_read(a, order, ha);
  helical_read(b, order, hb);

  const double n = static_cast<double>(ha.size());
  const double sum_a = kernels::sum(ha);
  const double sum_b = kernels::sum(hb);
  const double sum_aa = kernels::sum_squares(ha);
  const double sum_bb = kernels::sum_squares(hb);
  const double sum_ab = kernels::dot(ha, hb);
  const double var_a = sum_aa - sum_a * sum_a / n;
  const double var_b = sum_bb - sum_b * sum_b / n;
  if (!(var_a > 0.0) || !(var_b > 0.0))
    throw DomainError("compare: zero-variance input, correlation undefined");

  EquivalenceMetrics m;
  m.e_tot = kernels::sum_squared_diff(ha, hb);
  m.pearson_r = (sum_ab - sum_a * sum_b / n) / std::sqrt(var_a * var_b);
  return m;
}

EquivalenceMetrics compare(const FactorizationResult& a, const FactorizationResult& b,
                           const HelicalOrder& order) {
  return compare(a.factor, b.factor, order);
}

std::vector<SweepRow> sweep_equivalence(const SweepConfig& config) {
  std::vector<std::int64_t> ladder = config.space_ladder;
  std::sort(ladder.begin(), ladder.end());
  std::vector<SweepRow> rows(ladder.size());

  const auto evaluate = [&](std::size_t i) {
    const std::int64_t m = ladder[i];
    if (m <= 0) throw ShapeError("sweep: space sample counts must be positive");
    const Field h = ricker_response(config.ricker, m, config.time_samples);
    Field data;
    if (config.source == SweepSource::Dirac) {
      data = h;
    } else {
      const Field s = white_excitation(config.seed, m, config.time_samples);
      data = synth_data(h, s);
    }
    FactorizeOptions opt;
    opt.floor_rel = config.floor_rel;
    opt.diagnostics = false;
    const HelicalOrder order = column_wise_order(2);
    const FactorizationResult nd = factorize_nd(data, Region::upper_nshp(), opt);
    const FactorizationResult hel = factorize_helical(data, order, opt);
    const EquivalenceMetrics metrics = compare(nd, hel, order);
    const double energy = kernels::sum_squares(data.data);
    rows[i] = SweepRow{m, metrics.e_tot, energy > 0.0 ? metrics.e_tot / energy : 0.0,
                       metrics.pearson_r};
  };

  if (config.parallel && ladder.size() > 1) {
    const std::int64_t count = static_cast<std::int64_t>(ladder.size());
    std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t i = 0; i < count; ++i) {
      try {
        evaluate(static_cast<std::size_t>(i));
      } catch (...) {
#pragma omp critical
        if (!failure) failure = std::current_exception();
      }
    }
    if (failure) std::rethrow_exception(failure);
  } else {
    for (std::size_t i = 0; i < ladder.size(); ++i) evaluate(i);
  }
  return rows;
}

BackpropResult backprop_experiment(const PlaneWaveParams& params,
                                   std::int64_t space_samples, std::int64_t time_samples,
                                   std::optional<HelicalOrder> order, double floor_rel) {
  const Field forward = plane_wave(params, space_samples, time_samples, WaveDirection::Forward);
  const Field backward = plane_wave(params, space_samples, time_samples, WaveDirection::Backward);
  Field data = zeros(forward.dims, forward.steps);
  for (std::size_t i = 0; i < data.data.size(); ++i)
    data.data[i] = forward.data[i] + backward.data[i];

  const HelicalOrder helix_order = order.value_or(column_wise_order(2));
  FactorizeOptions opt;
  opt.floor_rel = floor_rel;
  opt.diagnostics = false;
  const FactorizationResult result = factorize_helical(data, helix_order, opt);

  BackpropResult out;
  out.marginal = !(params.alpha > 0.0 && params.beta > 0.0);
  out.r_forward = compare(result.factor, forward, helix_order).pearson_r;
  out.r_backward = compare(result.factor, backward, helix_order).pearson_r;
  return out;
}

}  // namespace helix
