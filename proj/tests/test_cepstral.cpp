#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "helix/cepstral.hpp"
#include "helix/errors.hpp"
#include "helix/fft.hpp"
#include "helix/kernels.hpp"
#include "helix/synth.hpp"
#include "support.hpp"

using helix::Cepstrum;
using helix::Field;
using helix::PowerSpectrum;
using helix::ProjectionWindow;
using helix::Region;

namespace {

std::int64_t wrap(std::int64_t i, std::int64_t n) { return ((i % n) + n) % n; }

// random field whose spectrum stays well conditioned: impulse + noise scaled
// so each DFT bin deviates from 1 by ~amplitude rms
Field conditioned_field(std::vector<std::int64_t> dims, std::uint64_t seed,
                        double amplitude = 0.15) {
  std::mt19937_64 eng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  Field f = helix::unit_impulse(std::move(dims));
  const double scale = amplitude / std::sqrt(static_cast<double>(f.data.size()));
  for (auto& x : f.data) x += scale * normal(eng);
  return f;
}

}  // namespace

TEST_CASE("power spectrum of a unit impulse is flat") {
  const auto s = helix::power_spectrum(helix::unit_impulse({4, 4}));
  for (double v : s.values) CHECK(v == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("power spectrum of a constant field is DC-only") {
  Field f = helix::zeros({8});
  for (auto& x : f.data) x = 3.0;
  const auto s = helix::power_spectrum(f);
  CHECK(s.values[0] == doctest::Approx(576.0).epsilon(1e-13));  // (c N)^2
  for (std::size_t i = 1; i < 8; ++i) CHECK(std::abs(s.values[i]) < 1e-10);
}

TEST_CASE("power spectrum of (1, 0.5) zero-padded to N=4") {
  Field f = helix::zeros({4});
  f.data[0] = 1.0;
  f.data[1] = 0.5;
  const auto s = helix::power_spectrum(f);
  CHECK(s.values[0] == doctest::Approx(2.25).epsilon(1e-14));
  CHECK(s.values[1] == doctest::Approx(1.25).epsilon(1e-14));
  CHECK(s.values[2] == doctest::Approx(0.25).epsilon(1e-14));
  CHECK(s.values[3] == doctest::Approx(1.25).epsilon(1e-14));
}

TEST_CASE("power spectrum matches the brute-force DFT oracle") {
  std::mt19937_64 eng(5);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  Field f = helix::zeros({5, 3});
  for (auto& x : f.data) x = dist(eng);
  const auto s = helix::power_spectrum(f);
  const auto oracle = testsupport::naive_dft_forward(f.dims, f.data);
  for (std::size_t i = 0; i < s.values.size(); ++i)
    CHECK(s.values[i] == doctest::Approx(std::norm(oracle[i])).epsilon(1e-10));
}

TEST_CASE("cepstrum of an all-ones spectrum is zero") {
  PowerSpectrum s;
  s.dims = {8};
  s.values.assign(8, 1.0);
  const auto c = helix::cepstrum_of_spectrum(s);
  for (double v : c.values) CHECK(std::abs(v) < 1e-15);
  CHECK(c.floored_bins == 0);
}

TEST_CASE("cepstrum of |1 + 0.5 z^-1|^2 follows the log series") {
  // log(1 + a z^-1) = sum (-1)^{k+1} a^k / k z^-k, plus the conjugate branch
  const std::int64_t n = 4096;
  Field f = helix::zeros({n});
  f.data[0] = 1.0;
  f.data[1] = 0.5;
  const auto c = helix::cepstrum_of_spectrum(helix::power_spectrum(f));
  CHECK(c.values[1] == doctest::Approx(0.5).epsilon(1e-10));
  CHECK(c.values[2] == doctest::Approx(-0.125).epsilon(1e-10));
  CHECK(c.values[3] == doctest::Approx(1.0 / 24.0).epsilon(1e-9));
  // evenness c(n) = c(N-n)
  for (std::int64_t i = 1; i < 16; ++i)
    CHECK(std::abs(c.values[static_cast<std::size_t>(i)] -
                   c.values[static_cast<std::size_t>(n - i)]) < 1e-12);
}

TEST_CASE("cepstrum evenness holds on multi-dimensional grids") {
  for (const auto& dims : std::vector<std::vector<std::int64_t>>{{16, 12}, {5, 7}, {4, 6, 8}}) {
    const Field f = conditioned_field(dims, 99);
    const auto c = helix::cepstrum_of_spectrum(helix::power_spectrum(f));
    const std::int64_t n0 = dims[0];
    const std::int64_t n1 = dims.size() > 1 ? dims[1] : 1;
    for (std::size_t i = 0; i < c.values.size(); ++i) {
      const std::int64_t lin = static_cast<std::int64_t>(i);
      const std::int64_t i0 = lin % n0, i1 = (lin / n0) % n1, i2 = lin / (n0 * n1);
      std::int64_t j = wrap(-i0, n0) + n0 * wrap(-i1, n1);
      if (dims.size() > 2) j += n0 * n1 * wrap(-i2, dims[2]);
      CHECK(std::abs(c.values[i] - c.values[static_cast<std::size_t>(j)]) < 1e-12);
    }
  }
}

TEST_CASE("cepstrum of a separable field lives on the axes") {
  std::mt19937_64 eng(17);
  const auto u = testsupport::random_minphase(eng, 3);
  const auto v = testsupport::random_minphase(eng, 4);
  const Field f = testsupport::outer_2d(u, 32, v, 32);
  const auto c = helix::cepstrum_of_spectrum(helix::power_spectrum(f));
  double off_axis = 0.0, total = 0.0;
  for (std::int64_t j = 0; j < 32; ++j)
    for (std::int64_t i = 0; i < 32; ++i) {
      const double val = c.values[static_cast<std::size_t>(i + 32 * j)];
      total += val * val;
      if (i != 0 && j != 0) off_axis += val * val;
    }
  CHECK(off_axis / total < 1e-8);
}

TEST_CASE("degenerate spectrum raises a domain error") {
  PowerSpectrum s;
  s.dims = {4};
  s.values.assign(4, 0.0);
  CHECK_THROWS_AS(helix::cepstrum_of_spectrum(s), helix::DomainError);
}

TEST_CASE("spectral floor fires on zero bins and is recorded") {
  PowerSpectrum s;
  s.dims = {4};
  s.values = {4.0, 0.0, 1.0, 0.0};
  const auto c = helix::cepstrum_of_spectrum(s, 1e-6);
  CHECK(c.floored_bins == 2);
  CHECK(c.floor_value == doctest::Approx(4e-6));
}

TEST_CASE("Causal1D window on N=8") {
  const std::vector<std::int64_t> dims{8};
  const auto w = helix::region_window(Region::causal1d(), dims);
  CHECK(w.weights == std::vector<double>{0.5, 1, 1, 1, 0.5, 0, 0, 0});
}

TEST_CASE("Causal1D window on odd N has no Nyquist cell") {
  const std::vector<std::int64_t> dims{5};
  const auto w = helix::region_window(Region::causal1d(), dims);
  CHECK(w.weights == std::vector<double>{0.5, 1, 1, 0, 0});
}

TEST_CASE("UpperNSHP window on 4x4 resolves the boundary rays") {
  const std::vector<std::int64_t> dims{4, 4};
  const auto w = helix::region_window(Region::upper_nshp(), dims);
  // boundary ray: weight 1 at (1,0), weight 0 at (3,0) == (-1,0)
  CHECK(w.weights[1] == 1.0);
  CHECK(w.weights[3] == 0.0);
  // self-conjugate cells carry exactly 1/2
  for (std::int64_t i : {0, 2})
    for (std::int64_t j : {0, 2})
      CHECK(w.weights[static_cast<std::size_t>(i + 4 * j)] == 0.5);
}

TEST_CASE("region window + mirror window is the all-ones field") {
  const std::vector<std::vector<std::int64_t>> shapes2{{4, 4}, {5, 7}, {6, 5}, {8, 8}};
  for (const auto& dims : shapes2) {
    for (auto region : {Region::upper_nshp(), Region::lower_nshp(),
                        Region::quadrant(std::vector<int>{1, 1})}) {
      const auto w = helix::region_window(region, dims);
      const auto m = helix::region_window(region.mirror(), dims);
      for (std::size_t i = 0; i < w.weights.size(); ++i)
        CHECK(w.weights[i] + m.weights[i] == doctest::Approx(1.0).epsilon(1e-15));
    }
  }
  const std::vector<std::int64_t> dims3{4, 3, 6};
  const auto w3 = helix::region_window(Region::upper_nshs3d(), dims3);
  const auto m3 = helix::region_window(Region::lower_nshs3d(), dims3);
  for (std::size_t i = 0; i < w3.weights.size(); ++i)
    CHECK(w3.weights[i] + m3.weights[i] == doctest::Approx(1.0).epsilon(1e-15));
  const auto q3 = Region::quadrant(std::vector<int>{1, -1, 1});
  const auto wq = helix::region_window(q3, dims3);
  const auto mq = helix::region_window(q3.mirror(), dims3);
  for (std::size_t i = 0; i < wq.weights.size(); ++i)
    CHECK(wq.weights[i] + mq.weights[i] == doctest::Approx(1.0).epsilon(1e-15));
  const std::vector<std::int64_t> dims1{9};
  const auto w1 = helix::region_window(Region::causal1d(), dims1);
  const auto m1 = helix::region_window(Region::causal1d().mirror(), dims1);
  for (std::size_t i = 0; i < w1.weights.size(); ++i)
    CHECK(w1.weights[i] + m1.weights[i] == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("region window rejects arity mismatches") {
  const std::vector<std::int64_t> dims{4, 4};
  CHECK_THROWS_AS(helix::region_window(Region::causal1d(), dims), helix::ShapeError);
  CHECK_THROWS_AS(helix::region_window(Region::upper_nshs3d(), dims), helix::ShapeError);
}

TEST_CASE("projection is a pointwise product") {
  Cepstrum c;
  c.dims = {4};
  c.values = {1.0, 2.0, 3.0, 4.0};
  ProjectionWindow ones{{4}, {1, 1, 1, 1}};
  ProjectionWindow zeros{{4}, {0, 0, 0, 0}};
  CHECK(helix::project(c, ones).values == c.values);
  for (double v : helix::project(c, zeros).values) CHECK(v == 0.0);
  ProjectionWindow wrong{{5}, {1, 1, 1, 1, 1}};
  CHECK_THROWS_AS(helix::project(c, wrong), helix::ShapeError);
}

TEST_CASE("region + mirror projections reassemble an even cepstrum") {
  const Field f = conditioned_field({8, 6}, 3);
  const auto c = helix::cepstrum_of_spectrum(helix::power_spectrum(f));
  const auto w = helix::region_window(Region::upper_nshp(), c.dims);
  const auto m = helix::region_window(Region::lower_nshp(), c.dims);
  const auto a = helix::project(c, w);
  const auto b = helix::project(c, m);
  for (std::size_t i = 0; i < c.values.size(); ++i)
    CHECK(a.values[i] + b.values[i] == doctest::Approx(c.values[i]).epsilon(1e-14));
}

TEST_CASE("inverse homomorphic transform of a zero cepstrum is the unit impulse") {
  Cepstrum c;
  c.dims = {4, 4};
  c.values.assign(16, 0.0);
  const auto out = helix::inverse_homomorphic(c);
  CHECK(out.field.data[0] == doctest::Approx(1.0).epsilon(1e-14));
  for (std::size_t i = 1; i < 16; ++i) CHECK(std::abs(out.field.data[i]) < 1e-14);
  CHECK(out.imag_residue < 1e-14);
}

TEST_CASE("complex cepstrum round-trips a minimum-phase sequence") {
  // H^{-1}(H(s)) = s for s = (1, 0.5, 0, ...), N = 4096
  const std::int64_t n = 4096;
  Field s = helix::zeros({n});
  s.data[0] = 1.0;
  s.data[1] = 0.5;
  const auto c = helix::complex_cepstrum(s);
  const auto back = helix::inverse_homomorphic(c);
  CHECK(testsupport::rel_l2(back.field.data, s.data) < 1e-6);
}

TEST_CASE("homomorphic transform turns circular convolution into addition") {
  // H^{-1}(c1 + c2) equals H^{-1}(c1) (*) H^{-1}(c2)
  const Field f1 = conditioned_field({64}, 21);
  const Field f2 = conditioned_field({64}, 22);
  const auto c1 = helix::cepstrum_of_spectrum(helix::power_spectrum(f1));
  const auto c2 = helix::cepstrum_of_spectrum(helix::power_spectrum(f2));
  Cepstrum csum = c1;
  for (std::size_t i = 0; i < csum.values.size(); ++i) csum.values[i] += c2.values[i];

  const Field a = helix::inverse_homomorphic(c1).field;
  const Field b = helix::inverse_homomorphic(c2).field;
  const Field ab = helix::inverse_homomorphic(csum).field;

  // circular convolution of a and b via the spectral product
  auto fa = helix::fft::forward_real(a.dims, a.data);
  const auto fb = helix::fft::forward_real(b.dims, b.data);
  for (std::size_t i = 0; i < fa.size(); ++i) fa[i] *= fb[i];
  helix::fft::inverse(a.dims, fa.data());
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < fa.size(); ++i) {
    const double d = fa[i].real() - ab.data[i];
    num += d * d;
    den += ab.data[i] * ab.data[i];
  }
  CHECK(std::sqrt(num / den) < 1e-8);
}

TEST_CASE("cepstra add under circular convolution of the signals") {
  // H{s1 (*) s2} = H{s1} + H{s2} on the power-spectrum path
  const Field s1 = conditioned_field({32, 16}, 41);
  const Field s2 = conditioned_field({32, 16}, 42);
  const Field conv = helix::synth_data(s1, s2);
  const auto c1 = helix::cepstrum_of_spectrum(helix::power_spectrum(s1));
  const auto c2 = helix::cepstrum_of_spectrum(helix::power_spectrum(s2));
  const auto cc = helix::cepstrum_of_spectrum(helix::power_spectrum(conv));
  for (std::size_t i = 0; i < cc.values.size(); ++i)
    CHECK(std::abs(cc.values[i] - (c1.values[i] + c2.values[i])) < 1e-12);
}

TEST_CASE("exp overflow in the inverse transform raises a domain error") {
  Cepstrum c;
  c.dims = {8};
  c.values.assign(8, 0.0);
  c.values[0] = 1000.0;  // DFT DC term = 8000 >> log(DBL_MAX)
  CHECK_THROWS_AS(helix::inverse_homomorphic(c), helix::DomainError);
}

TEST_CASE("magnitude reconstruction: |DFT(causal factor)|^2 equals the spectrum") {
  for (const auto& dims :
       std::vector<std::vector<std::int64_t>>{{64}, {16, 12}, {9, 5}, {8, 6, 10}}) {
    const Field f = conditioned_field(dims, 31);
    const auto raw = helix::power_spectrum(f);
    // conditioning precondition of the invariant
    CHECK(helix::kernels::min_value(raw.values) / helix::kernels::max_value(raw.values) > 1e-6);
    Region region = dims.size() == 1   ? Region::causal1d()
                    : dims.size() == 2 ? Region::upper_nshp()
                                       : Region::upper_nshs3d();
    const auto c = helix::cepstrum_of_spectrum(raw);
    const auto w = helix::region_window(region, c.dims);
    const auto factor = helix::inverse_homomorphic(helix::project(c, w)).field;
    const auto achieved = helix::power_spectrum(factor);
    for (std::size_t i = 0; i < raw.values.size(); ++i)
      CHECK(std::abs(achieved.values[i] - raw.values[i]) / raw.values[i] < 1e-8);
  }
}

TEST_CASE("autocorrelation spectrum validates positive definiteness") {
  // r(0)=1, r(+-1)=0.8 has S(pi) = 1 - 1.6 < 0
  Field bad = helix::zeros({8});
  bad.data[0] = 1.0;
  bad.data[1] = 0.8;
  bad.data[7] = 0.8;
  CHECK_THROWS_AS(helix::autocorrelation_spectrum(bad), helix::DomainError);

  Field good = testsupport::embed_autocorr_1d(std::vector<double>{0.5, 1.25, 0.5}, 16);
  const auto s = helix::autocorrelation_spectrum(good);
  for (double v : s.values) CHECK(v >= 0.0);
  // S(w) = |1 + 0.5 e^{-iw}|^2: DC = 2.25, Nyquist = 0.25
  CHECK(s.values[0] == doctest::Approx(2.25).epsilon(1e-12));
  CHECK(s.values[8] == doctest::Approx(0.25).epsilon(1e-12));
}
