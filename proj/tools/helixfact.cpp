// helixfact: generate synthetics, run spectral factorizations, compare the
// d-dimensional and helical solutions, sweep the space-sample ladder, check
// Z-domain pole/zero catalogs, and import raw volumes.

#include <CLI11.hpp>

#include <cmath>
#include <complex>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "helix/cepstral.hpp"
#include "helix/config.hpp"
#include "helix/errors.hpp"
#include "helix/factorize.hpp"
#include "helix/field.hpp"
#include "helix/hlxf.hpp"
#include "helix/kernels.hpp"
#include "helix/synth.hpp"
#include "helix/zoracle.hpp"

namespace {

namespace fs = std::filesystem;
using helix::Config;

// exit codes; distinct classes per the CLI contract
constexpr int kExitOk = 0;
constexpr int kExitPropertyViolation = 1;
constexpr int kExitUsage = 2;
constexpr int kExitFormat = 3;
constexpr int kExitNumericDomain = 4;
constexpr int kExitIo = 5;
constexpr int kExitMarginal = 6;

struct CommonArgs {
  std::string config_path;
};

Config load_base_config(const CommonArgs& common) {
  if (common.config_path.empty()) return Config{};
  return Config::from_file(common.config_path);
}

// typed read with default, echoing the effective value back into the config
// so the serialized manifest is complete
double resolve_double(Config& cfg, const std::string& key, double fallback) {
  const double v = cfg.get_double(key, fallback);
  cfg.set(key, helix::format_double(v));
  return v;
}

std::int64_t resolve_int(Config& cfg, const std::string& key, std::int64_t fallback) {
  const auto v = cfg.get_int(key, fallback);
  cfg.set(key, std::to_string(v));
  return v;
}

std::uint64_t resolve_uint(Config& cfg, const std::string& key, std::uint64_t fallback) {
  const auto v = cfg.get_uint(key, fallback);
  cfg.set(key, std::to_string(v));
  return v;
}

std::string resolve_string(Config& cfg, const std::string& key, const std::string& fallback) {
  const auto v = cfg.get_string(key, fallback);
  cfg.set(key, v);
  return v;
}

std::vector<std::int64_t> resolve_int_list(Config& cfg, const std::string& key,
                                           std::vector<std::int64_t> fallback) {
  auto v = cfg.get_int_list(key, std::move(fallback));
  cfg.set(key, helix::format_int_list(v));
  return v;
}

void write_manifest(const fs::path& next_to, const Config& cfg) {
  fs::path manifest = next_to;
  manifest.replace_extension(".config");
  helix::write_text_file(manifest, cfg.serialize());
}

helix::RickerParams ricker_from(Config& cfg) {
  helix::RickerParams p;
  p.sigma = resolve_double(cfg, "sigma", p.sigma);
  p.distance = resolve_double(cfg, "distance", p.distance);
  p.speed = resolve_double(cfg, "speed", p.speed);
  p.dt = resolve_double(cfg, "dt", p.dt);
  p.dx = resolve_double(cfg, "dx", p.dx);
  return p;
}

helix::PlaneWaveParams wave_from(Config& cfg) {
  helix::PlaneWaveParams p;
  p.amplitude = resolve_double(cfg, "amplitude", p.amplitude);
  p.alpha = resolve_double(cfg, "alpha", p.alpha);
  p.beta = resolve_double(cfg, "beta", p.beta);
  p.wavenumber = resolve_double(cfg, "wavenumber", p.wavenumber);
  p.omega = resolve_double(cfg, "omega", p.omega);
  p.dx = resolve_double(cfg, "dx", p.dx);
  p.dt = resolve_double(cfg, "dt", p.dt);
  return p;
}

helix::Region region_by_name(const std::string& name) {
  if (name == "causal1d") return helix::Region::causal1d();
  if (name == "upper-nshp") return helix::Region::upper_nshp();
  if (name == "lower-nshp") return helix::Region::lower_nshp();
  if (name == "upper-nshs") return helix::Region::upper_nshs3d();
  if (name == "lower-nshs") return helix::Region::lower_nshs3d();
  throw helix::ShapeError("unknown region '" + name +
                          "' (expected causal1d, upper-nshp, lower-nshp, upper-nshs, lower-nshs)");
}

helix::HelicalOrder order_by_name(const std::string& name, int ndim) {
  if (name == "column" || name.empty()) return helix::column_wise_order(ndim);
  if (name == "row") return helix::row_wise_order(ndim);
  helix::HelicalOrder order;
  std::string item;
  std::istringstream in(name);
  try {
    while (std::getline(in, item, ','))
      if (!item.empty()) order.axes.push_back(std::stoi(item));
  } catch (const std::exception&) {
    throw helix::ShapeError("cannot parse helix order '" + name + "'");
  }
  helix::validate(order, ndim);
  return order;
}

std::vector<std::int64_t> parse_dims(const std::string& text) {
  std::vector<std::int64_t> dims;
  std::string item;
  try {
    for (char c : text) {
      if (c == 'x' || c == 'X' || c == ',') {
        if (!item.empty()) dims.push_back(std::stoll(item));
        item.clear();
      } else {
        item += c;
      }
    }
    if (!item.empty()) dims.push_back(std::stoll(item));
  } catch (const std::exception&) {
    throw helix::ShapeError("cannot parse dims '" + text + "'");
  }
  return dims;
}

std::string csv_row(std::int64_t m, double e_tot, double e_tot_norm, double r) {
  return std::to_string(m) + "," + helix::format_double(e_tot) + "," +
         helix::format_double(e_tot_norm) + "," + helix::format_double(r) + "\n";
}

constexpr const char* kCsvHeader = "M,e_tot,e_tot_norm,pearson_r\n";

// ---------------------------------------------------------------- gen

int cmd_gen(Config cfg, const std::string& out_prefix) {
  const auto space = resolve_int(cfg, "space", 1024);
  const auto time = resolve_int(cfg, "time", 1024);
  if (space <= 0 || time <= 0) throw helix::ShapeError("gen: space/time must be positive");
  const auto seed = resolve_uint(cfg, "seed", 7);
  const bool dirac = cfg.get_bool("dirac", false);
  cfg.set("dirac", dirac ? "true" : "false");
  const helix::RickerParams params = ricker_from(cfg);

  const helix::Field h = helix::ricker_response(params, space, time);
  helix::Field s;
  helix::Field d;
  if (dirac) {
    s = helix::unit_impulse({space, time}, {params.dx, params.dt});
    d = h;  // delta excitation: data is the impulse response, bit for bit
  } else {
    const std::int64_t dims[2] = {space, time};
    const double steps[2] = {params.dx, params.dt};
    s = helix::white_excitation(seed, std::span<const std::int64_t>(dims, 2),
                                std::span<const double>(steps, 2));
    d = helix::synth_data(h, s);
  }
  helix::write_hlxf(out_prefix + "_h.hlxf", h);
  helix::write_hlxf(out_prefix + "_s.hlxf", s);
  helix::write_hlxf(out_prefix + "_d.hlxf", d);
  write_manifest(out_prefix + ".hlxf", cfg);
  std::cout << "wrote " << out_prefix << "_{h,s,d}.hlxf (" << space << "x" << time << ")\n";
  return kExitOk;
}

// ---------------------------------------------------------------- factor

int cmd_factor(Config cfg, const std::string& in_path, const std::string& out_path,
               std::string report_path) {
  const std::string mode = resolve_string(cfg, "mode", "helix");
  const std::string input_kind = resolve_string(cfg, "input", "data");
  const double eps = resolve_double(cfg, "eps", helix::kDefaultFloorRel);

  const helix::Field field = helix::read_hlxf(in_path);
  const int ndim = static_cast<int>(field.dims.size());

  helix::FactorizeOptions opt;
  opt.floor_rel = eps;
  if (input_kind == "data") {
    opt.input = helix::SpectralInput::Data;
  } else if (input_kind == "autocorr") {
    opt.input = helix::SpectralInput::Autocorrelation;
  } else {
    throw helix::ShapeError("factor: --input must be data or autocorr");
  }

  helix::FactorizationResult result;
  if (mode == "nd") {
    const std::string default_region =
        ndim == 1 ? "causal1d" : (ndim == 2 ? "upper-nshp" : "upper-nshs");
    const std::string region_name = resolve_string(cfg, "region", default_region);
    result = helix::factorize_nd(field, region_by_name(region_name), opt);
  } else if (mode == "helix") {
    const std::string order_name = resolve_string(cfg, "order", "column");
    result = helix::factorize_helical(field, order_by_name(order_name, ndim), opt);
  } else {
    throw helix::ShapeError("factor: --mode must be nd or helix");
  }

  helix::write_hlxf(out_path, result.factor);

  std::string report;
  report += "input = " + in_path + "\n";
  report += "mode = " + mode + "\n";
  report += "region = " + std::string(helix::to_string(result.region.kind)) + "\n";
  report += "floor_fired = " + std::string(result.floored_bins > 0 ? "true" : "false") + "\n";
  report += "floor_value = " + helix::format_double(result.floor_value) + "\n";
  report += "floored_bins = " + std::to_string(result.floored_bins) + "\n";
  report += "causality_residual = " + helix::format_double(result.causality_residual) + "\n";
  report += "magnitude_residual = " + helix::format_double(result.magnitude_residual) + "\n";
  report += "imag_residue = " + helix::format_double(result.imag_residue) + "\n";
  if (report_path.empty()) {
    fs::path p = out_path;
    p.replace_extension(".report");
    report_path = p.string();
  }
  helix::write_text_file(report_path, report);
  write_manifest(out_path, cfg);
  std::cout << report;
  return kExitOk;
}

// ---------------------------------------------------------------- compare

int cmd_compare(Config cfg, const std::string& a_path, const std::string& b_path,
                const std::string& out_csv) {
  const helix::Field a = helix::read_hlxf(a_path);
  const helix::Field b = helix::read_hlxf(b_path);
  const std::string order_name = resolve_string(cfg, "order", "column");
  const helix::HelicalOrder order = order_by_name(order_name, static_cast<int>(a.dims.size()));

  const helix::EquivalenceMetrics m = helix::compare(a, b, order);
  const double energy = helix::kernels::sum_squares(a.data);
  std::string csv = kCsvHeader;
  csv += csv_row(a.dims[0], m.e_tot, energy > 0.0 ? m.e_tot / energy : 0.0, m.pearson_r);
  helix::write_text_file(out_csv, csv);
  write_manifest(out_csv, cfg);
  std::cout << csv;
  return kExitOk;
}

// ---------------------------------------------------------------- sweep

constexpr const char* kPlotScript = R"PY(#!/usr/bin/env python3
"""Renders e_tot_norm and pearson_r against M from a sweep CSV."""
import csv
import sys

import matplotlib
matplotlib.use("Agg")
import matplotlib.pyplot as plt

csv_path = sys.argv[1] if len(sys.argv) > 1 else "CSV_PATH"
rows = list(csv.DictReader(open(csv_path)))
m = [int(r["M"]) for r in rows]
err = [float(r["e_tot_norm"]) for r in rows]
corr = [float(r["pearson_r"]) for r in rows]

fig, (ax1, ax2) = plt.subplots(2, 1, figsize=(6, 7), sharex=True)
ax1.loglog(m, err, "o-")
ax1.set_ylabel("total approximation error (normalized)")
ax1.grid(True, which="both", alpha=0.3)
ax2.semilogx(m, corr, "s-")
ax2.set_xlabel("number of space samples M")
ax2.set_ylabel("Pearson correlation R")
ax2.grid(True, which="both", alpha=0.3)
out = csv_path.rsplit(".", 1)[0] + ".png"
fig.tight_layout()
fig.savefig(out, dpi=150)
print("wrote", out)
)PY";

int cmd_sweep(Config cfg, const std::string& out_csv, const std::string& plot_script) {
  helix::SweepConfig sweep;
  sweep.space_ladder = resolve_int_list(cfg, "ladder", {16, 32, 64, 128});
  sweep.time_samples = resolve_int(cfg, "time", 256);
  sweep.seed = resolve_uint(cfg, "seed", 7);
  sweep.floor_rel = resolve_double(cfg, "eps", helix::kDefaultFloorRel);
  sweep.ricker = ricker_from(cfg);
  const std::string generator = resolve_string(cfg, "generator", "ricker");
  if (generator != "ricker")
    throw helix::ShapeError("sweep: unknown generator '" + generator + "'");
  const std::string source = resolve_string(cfg, "source", "dirac");
  if (source == "dirac") {
    sweep.source = helix::SweepSource::Dirac;
  } else if (source == "white") {
    sweep.source = helix::SweepSource::White;
  } else {
    throw helix::ShapeError("sweep: --source must be dirac or white");
  }

  const auto rows = helix::sweep_equivalence(sweep);
  std::string csv = kCsvHeader;
  for (const auto& row : rows)
    csv += csv_row(row.space_samples, row.e_tot, row.e_tot_norm, row.pearson_r);
  helix::write_text_file(out_csv, csv);
  write_manifest(out_csv, cfg);
  if (!plot_script.empty()) {
    std::string script = kPlotScript;
    const std::string token = "CSV_PATH";
    script.replace(script.find(token), token.size(), out_csv);
    helix::write_text_file(plot_script, script);
  }
  std::cout << csv;
  return kExitOk;
}

// ---------------------------------------------------------------- zcheck

int cmd_zcheck(Config cfg, const std::string& out_csv) {
  const helix::PlaneWaveParams params = wave_from(cfg);
  const auto space = resolve_int(cfg, "space", 64);
  const auto time = resolve_int(cfg, "time", 512);
  const std::string direction = resolve_string(cfg, "direction", "forward");
  if (direction != "forward" && direction != "backward" && direction != "both")
    throw helix::ShapeError("zcheck: --direction must be forward, backward or both");

  std::string csv = "kind,re,im,modulus,inside_unit_circle\n";
  bool violation = false;
  bool marginal = false;
  constexpr double kBoundaryTol = 1e-12;

  const auto emit = [&](const std::string& kind, const helix::PoleZeroSet& set,
                        bool counts_toward_exit) {
    const auto emit_entries = [&](const std::vector<helix::PoleZero>& entries,
                                  const char* what) {
      for (const auto& e : entries) {
        const double mod = std::abs(e.value);
        csv += kind + "-" + what + "," + helix::format_double(e.value.real()) + "," +
               helix::format_double(e.value.imag()) + "," + helix::format_double(mod) + "," +
               (mod < 1.0 ? "true" : "false") + "\n";
        if (counts_toward_exit) {
          if (std::abs(mod - 1.0) <= kBoundaryTol)
            marginal = true;
          else if (mod > 1.0)
            violation = true;
        }
      }
    };
    emit_entries(set.poles, "pole");
    emit_entries(set.zeros, "zero");
  };

  const auto run_direction = [&](helix::WaveDirection dir, const std::string& name) {
    const auto axes = helix::plane_wave_pz(params, space, time, dir);
    emit(name + "-original-space", axes.space, false);
    emit(name + "-original-time", axes.time, false);
    // the helical catalog decides minimum phase of the vectorized solution
    const auto hel = helix::helical_pz(params, space, time, dir);
    emit(name + "-helical", hel, true);
  };

  if (direction == "forward" || direction == "both")
    run_direction(helix::WaveDirection::Forward, "forward");
  if (direction == "backward" || direction == "both")
    run_direction(helix::WaveDirection::Backward, "backward");

  helix::write_text_file(out_csv, csv);
  write_manifest(out_csv, cfg);
  if (violation) {
    std::cout << "minimum-phase violation: helical catalog has modulus >= 1\n";
    return kExitPropertyViolation;
  }
  if (marginal) {
    std::cout << "marginal spectrum: helical catalog touches the unit circle\n";
    return kExitMarginal;
  }
  std::cout << "helical catalog strictly inside the unit circle\n";
  return kExitOk;
}

// ---------------------------------------------------------------- load

int cmd_load(Config cfg, const std::string& raw_path, const std::string& out_path) {
  const std::string dims_text = resolve_string(cfg, "dims", "");
  if (dims_text.empty()) throw helix::ShapeError("load: --dims is required");
  const std::string dtype_text = resolve_string(cfg, "dtype", "f32");
  helix::RawDType dtype;
  if (dtype_text == "f32") {
    dtype = helix::RawDType::F32;
  } else if (dtype_text == "f64") {
    dtype = helix::RawDType::F64;
  } else {
    throw helix::ShapeError("load: --dtype must be f32 or f64");
  }
  const auto dims = parse_dims(dims_text);
  std::vector<double> steps;
  const std::string steps_text = resolve_string(cfg, "steps", "");
  if (!steps_text.empty()) {
    std::istringstream in(steps_text);
    std::string item;
    try {
      while (std::getline(in, item, ','))
        if (!item.empty()) steps.push_back(std::stod(item));
    } catch (const std::exception&) {
      throw helix::ShapeError("cannot parse steps '" + steps_text + "'");
    }
  }
  const helix::Field f = helix::read_raw(raw_path, dims, dtype, steps);
  helix::write_hlxf(out_path, f);
  write_manifest(out_path, cfg);
  std::cout << "wrote " << out_path << " (" << dims_text << ", " << dtype_text << ")\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"helixfact: multidimensional spectral factorization via helical mapping"};
  app.require_subcommand(1);

  CommonArgs common;

  // gen
  auto* gen = app.add_subcommand("gen", "generate Ricker/white synthetic volumes");
  std::string gen_out;
  gen->add_option("--out", gen_out, "output prefix")->required();
  gen->add_option("--config", common.config_path, "key = value config file");
  std::int64_t gen_space = 0, gen_time = 0;
  std::uint64_t gen_seed = 0;
  double gen_sigma = 0, gen_distance = 0, gen_speed = 0, gen_dt = 0, gen_dx = 0;
  bool gen_dirac = false;
  auto* og_space = gen->add_option("--space,-M", gen_space, "space samples")->check(CLI::PositiveNumber);
  auto* og_time = gen->add_option("--time,-N", gen_time, "time samples")->check(CLI::PositiveNumber);
  auto* og_seed = gen->add_option("--seed", gen_seed, "excitation seed");
  auto* og_sigma = gen->add_option("--sigma", gen_sigma, "wavelet width [s]");
  auto* og_distance = gen->add_option("--distance", gen_distance, "source distance R [m]");
  auto* og_speed = gen->add_option("--speed", gen_speed, "propagation speed v [m/s]");
  auto* og_dt = gen->add_option("--dt", gen_dt, "temporal step [s]");
  auto* og_dx = gen->add_option("--dx", gen_dx, "spatial step [m]");
  gen->add_flag("--dirac", gen_dirac, "Dirac excitation: d equals h");

  // factor
  auto* factor = app.add_subcommand("factor", "spectral factorization of an HLXF volume");
  std::string factor_in, factor_out, factor_report, factor_mode, factor_region, factor_order,
      factor_input;
  double factor_eps = 0;
  factor->add_option("--in", factor_in, "input HLXF")->required();
  factor->add_option("--out", factor_out, "factor HLXF")->required();
  factor->add_option("--report", factor_report, "report path (default: out stem + .report)");
  factor->add_option("--config", common.config_path, "key = value config file");
  auto* of_mode = factor->add_option("--mode", factor_mode, "nd | helix");
  auto* of_region = factor->add_option("--region", factor_region,
                                       "admissible region for nd mode");
  auto* of_order = factor->add_option("--order", factor_order, "helix order: column, row or list");
  auto* of_input = factor->add_option("--input", factor_input, "data | autocorr");
  auto* of_eps = factor->add_option("--eps", factor_eps, "relative spectral floor");

  // compare
  auto* compare = app.add_subcommand("compare", "equivalence metrics between two volumes");
  std::string cmp_a, cmp_b, cmp_out, cmp_order;
  compare->add_option("--a", cmp_a, "first HLXF")->required();
  compare->add_option("--b", cmp_b, "second HLXF")->required();
  compare->add_option("--out", cmp_out, "output CSV")->required();
  compare->add_option("--config", common.config_path, "key = value config file");
  auto* oc_order = compare->add_option("--order", cmp_order, "helix order");

  // sweep
  auto* sweep = app.add_subcommand("sweep", "equivalence metrics over a ladder of M");
  std::string sweep_out, sweep_plot, sweep_ladder, sweep_source;
  std::int64_t sweep_time = 0;
  std::uint64_t sweep_seed = 0;
  double sweep_eps = 0;
  sweep->add_option("--out", sweep_out, "output CSV")->required();
  sweep->add_option("--plot-script", sweep_plot, "emit a python plot script");
  sweep->add_option("--config", common.config_path, "key = value config file");
  auto* os_ladder = sweep->add_option("--ladder", sweep_ladder, "comma list of M values");
  auto* os_time = sweep->add_option("--time,-N", sweep_time, "time samples")->check(CLI::PositiveNumber);
  auto* os_seed = sweep->add_option("--seed", sweep_seed, "excitation seed");
  auto* os_source = sweep->add_option("--source", sweep_source, "dirac | white");
  auto* os_eps = sweep->add_option("--eps", sweep_eps, "relative spectral floor");

  // zcheck
  auto* zcheck = app.add_subcommand("zcheck", "pole/zero catalogs of the damped plane wave");
  std::string z_out, z_direction;
  double z_alpha = 0, z_beta = 0, z_wavenumber = 0, z_omega = 0, z_dx = 0, z_dt = 0;
  std::int64_t z_space = 0, z_time = 0;
  zcheck->add_option("--out", z_out, "output CSV")->required();
  zcheck->add_option("--config", common.config_path, "key = value config file");
  auto* oz_alpha = zcheck->add_option("--alpha", z_alpha, "spatial attenuation [1/m]");
  auto* oz_beta = zcheck->add_option("--beta", z_beta, "temporal attenuation [1/s]");
  auto* oz_k = zcheck->add_option("--wavenumber", z_wavenumber, "wavenumber k [rad/m]");
  auto* oz_w = zcheck->add_option("--omega", z_omega, "angular frequency [rad/s]");
  auto* oz_dx = zcheck->add_option("--dx", z_dx, "spatial step [m]");
  auto* oz_dt = zcheck->add_option("--dt", z_dt, "temporal step [s]");
  auto* oz_space = zcheck->add_option("--space,-M", z_space, "space samples")->check(CLI::PositiveNumber);
  auto* oz_time = zcheck->add_option("--time,-N", z_time, "time samples")->check(CLI::PositiveNumber);
  auto* oz_dir = zcheck->add_option("--direction", z_direction, "forward | backward | both");

  // load
  auto* load = app.add_subcommand("load", "convert a raw volume to HLXF");
  std::string load_raw, load_out, load_dims, load_dtype, load_steps;
  load->add_option("--raw", load_raw, "raw little-endian volume")->required();
  load->add_option("--out", load_out, "output HLXF")->required();
  load->add_option("--config", common.config_path, "key = value config file");
  auto* ol_dims = load->add_option("--dims", load_dims, "axis lengths, e.g. 32x32x64");
  auto* ol_dtype = load->add_option("--dtype", load_dtype, "f32 | f64");
  auto* ol_steps = load->add_option("--steps", load_steps, "per-axis sampling steps");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }

  try {
    Config cfg = load_base_config(common);
    if (gen->parsed()) {
      if (og_space->count()) cfg.set("space", std::to_string(gen_space));
      if (og_time->count()) cfg.set("time", std::to_string(gen_time));
      if (og_seed->count()) cfg.set("seed", std::to_string(gen_seed));
      if (og_sigma->count()) cfg.set("sigma", helix::format_double(gen_sigma));
      if (og_distance->count()) cfg.set("distance", helix::format_double(gen_distance));
      if (og_speed->count()) cfg.set("speed", helix::format_double(gen_speed));
      if (og_dt->count()) cfg.set("dt", helix::format_double(gen_dt));
      if (og_dx->count()) cfg.set("dx", helix::format_double(gen_dx));
      if (gen_dirac) cfg.set("dirac", "true");
      return cmd_gen(std::move(cfg), gen_out);
    }
    if (factor->parsed()) {
      if (of_mode->count()) cfg.set("mode", factor_mode);
      if (of_region->count()) cfg.set("region", factor_region);
      if (of_order->count()) cfg.set("order", factor_order);
      if (of_input->count()) cfg.set("input", factor_input);
      if (of_eps->count()) cfg.set("eps", helix::format_double(factor_eps));
      return cmd_factor(std::move(cfg), factor_in, factor_out, factor_report);
    }
    if (compare->parsed()) {
      if (oc_order->count()) cfg.set("order", cmp_order);
      return cmd_compare(std::move(cfg), cmp_a, cmp_b, cmp_out);
    }
    if (sweep->parsed()) {
      if (os_ladder->count()) cfg.set("ladder", sweep_ladder);
      if (os_time->count()) cfg.set("time", std::to_string(sweep_time));
      if (os_seed->count()) cfg.set("seed", std::to_string(sweep_seed));
      if (os_source->count()) cfg.set("source", sweep_source);
      if (os_eps->count()) cfg.set("eps", helix::format_double(sweep_eps));
      return cmd_sweep(std::move(cfg), sweep_out, sweep_plot);
    }
    if (zcheck->parsed()) {
      if (oz_alpha->count()) cfg.set("alpha", helix::format_double(z_alpha));
      if (oz_beta->count()) cfg.set("beta", helix::format_double(z_beta));
      if (oz_k->count()) cfg.set("wavenumber", helix::format_double(z_wavenumber));
      if (oz_w->count()) cfg.set("omega", helix::format_double(z_omega));
      if (oz_dx->count()) cfg.set("dx", helix::format_double(z_dx));
      if (oz_dt->count()) cfg.set("dt", helix::format_double(z_dt));
      if (oz_space->count()) cfg.set("space", std::to_string(z_space));
      if (oz_time->count()) cfg.set("time", std::to_string(z_time));
      if (oz_dir->count()) cfg.set("direction", z_direction);
      return cmd_zcheck(std::move(cfg), z_out);
    }
    if (load->parsed()) {
      if (ol_dims->count()) cfg.set("dims", load_dims);
      if (ol_dtype->count()) cfg.set("dtype", load_dtype);
      if (ol_steps->count()) cfg.set("steps", load_steps);
      return cmd_load(std::move(cfg), load_raw, load_out);
    }
    std::cerr << "no subcommand\n";
    return kExitUsage;
  } catch (const helix::FormatError& e) {
    std::cerr << "format error: " << e.what() << "\n";
    return kExitFormat;
  } catch (const helix::MarginalSpectrumError& e) {
    std::cerr << "marginal spectrum: " << e.what() << "\n";
    return kExitMarginal;
  } catch (const helix::DomainError& e) {
    std::cerr << "numeric-domain error: " << e.what() << "\n";
    return kExitNumericDomain;
  } catch (const helix::ShapeError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  }
}
