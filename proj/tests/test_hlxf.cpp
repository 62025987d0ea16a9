#include <doctest.h>

#include <unistd.h>

#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <string>

#include "helix/errors.hpp"
#include "helix/hlxf.hpp"
#include "helix/synth.hpp"

namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("hlxf_test_" + std::to_string(::getpid()) + "_" +
                                        std::to_string(counter++));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  static int counter;
};
int TempDir::counter = 0;

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return std::string((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
}

void spit(const fs::path& p, const std::string& bytes) {
  std::ofstream out(p, std::ios::binary);
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
}

}  // namespace

TEST_CASE("hlxf round-trips a field bit-exactly") {
  TempDir tmp;
  const helix::Field f = helix::white_excitation(17, std::vector<std::int64_t>{5, 3, 2},
                                                 std::vector<double>{5.0, 5.0, 0.02});
  const fs::path path = tmp.path / "vol.hlxf";
  helix::write_hlxf(path, f);
  const helix::Field back = helix::read_hlxf(path);
  CHECK(back.dims == f.dims);
  CHECK(back.steps == f.steps);
  CHECK(back.data == f.data);
  // no stray temp file left behind
  CHECK_FALSE(fs::exists(path.string() + ".tmp"));
}

TEST_CASE("hlxf rejects bad magic") {
  TempDir tmp;
  const fs::path path = tmp.path / "bad.hlxf";
  spit(path, "NOPE----------------------------");
  CHECK_THROWS_WITH_AS(helix::read_hlxf(path), doctest::Contains("bad magic"),
                       helix::FormatError);
}

TEST_CASE("hlxf names the byte offset of a truncation") {
  TempDir tmp;
  const helix::Field f = helix::white_excitation(3, 8, 8);
  const fs::path path = tmp.path / "vol.hlxf";
  helix::write_hlxf(path, f);
  std::string bytes = slurp(path);
  bytes.resize(bytes.size() - 24);  // drop three samples
  const fs::path cut = tmp.path / "cut.hlxf";
  spit(cut, bytes);
  CHECK_THROWS_WITH_AS(helix::read_hlxf(cut), doctest::Contains("byte offset"),
                       helix::FormatError);
}

TEST_CASE("hlxf rejects unsupported versions and bad ndim") {
  TempDir tmp;
  const helix::Field f = helix::white_excitation(3, 4, 4);
  const fs::path path = tmp.path / "vol.hlxf";
  helix::write_hlxf(path, f);
  std::string bytes = slurp(path);

  std::string v2 = bytes;
  v2[4] = 2;  // version little-endian low byte
  const fs::path pv = tmp.path / "v2.hlxf";
  spit(pv, v2);
  CHECK_THROWS_WITH_AS(helix::read_hlxf(pv), doctest::Contains("version"), helix::FormatError);

  std::string nd = bytes;
  nd[8] = 4;  // ndim byte
  const fs::path pn = tmp.path / "nd.hlxf";
  spit(pn, nd);
  CHECK_THROWS_WITH_AS(helix::read_hlxf(pn), doctest::Contains("ndim"), helix::FormatError);
}

TEST_CASE("raw import converts f32 and passes f64 through bit-preserved") {
  TempDir tmp;
  SUBCASE("f32") {
    const fs::path raw = tmp.path / "vol.f32";
    std::string bytes;
    const float vals[6] = {1.5f, -2.25f, 0.0f, 3.0f, -0.5f, 8.0f};
    bytes.append(reinterpret_cast<const char*>(vals), sizeof(vals));
    spit(raw, bytes);
    const helix::Field f = helix::read_raw(raw, {3, 2}, helix::RawDType::F32);
    CHECK(f.dims == std::vector<std::int64_t>{3, 2});
    for (int i = 0; i < 6; ++i)
      CHECK(f.data[static_cast<std::size_t>(i)] == static_cast<double>(vals[i]));
  }
  SUBCASE("f64 bit-preserved") {
    const fs::path raw = tmp.path / "vol.f64";
    std::string bytes;
    const double vals[4] = {1.0 / 3.0, -2.2250738585072014e-308, 1e300, -0.0};
    bytes.append(reinterpret_cast<const char*>(vals), sizeof(vals));
    spit(raw, bytes);
    const helix::Field f = helix::read_raw(raw, {4}, helix::RawDType::F64);
    for (int i = 0; i < 4; ++i) {
      const double got = f.data[static_cast<std::size_t>(i)];
      CHECK(std::memcmp(&got, &vals[i], 8) == 0);
    }
  }
  SUBCASE("size mismatch names expected vs actual bytes") {
    const fs::path raw = tmp.path / "short.f32";
    spit(raw, std::string(10, '\0'));
    CHECK_THROWS_WITH_AS(helix::read_raw(raw, {3, 2}, helix::RawDType::F32),
                         doctest::Contains("24"), helix::FormatError);
    try {
      helix::read_raw(raw, {3, 2}, helix::RawDType::F32);
    } catch (const helix::FormatError& e) {
      CHECK(std::string(e.what()).find("10") != std::string::npos);
    }
  }
}
