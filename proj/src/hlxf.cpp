#include "helix/hlxf.hpp"

#include <algorithm>
#include <bit>
#include <cstring>
#include <fstream>
#include <vector>

#include "helix/errors.hpp"

namespace helix {

namespace {

static_assert(std::endian::native == std::endian::little ||
                  std::endian::native == std::endian::big,
              "mixed-endian platforms are not supported");

template <typename T>
void put_le(std::string& out, T value) {
  unsigned char bytes[sizeof(T)];
  std::memcpy(bytes, &value, sizeof(T));
  if constexpr (std::endian::native == std::endian::big)
    std::reverse(std::begin(bytes), std::end(bytes));
  out.append(reinterpret_cast<const char*>(bytes), sizeof(T));
}

class Reader {
 public:
  Reader(const std::filesystem::path& path, std::string bytes)
      : path_(path.string()), bytes_(std::move(bytes)) {}

  template <typename T>
  T take(const char* what) {
    if (offset_ + sizeof(T) > bytes_.size())
      throw FormatError(path_ + ": truncated while reading " + std::string(what) +
                        " at byte offset " + std::to_string(offset_) + " (file has " +
                        std::to_string(bytes_.size()) + " bytes)");
    T value;
    std::memcpy(&value, bytes_.data() + offset_, sizeof(T));
    if constexpr (std::endian::native == std::endian::big) {
      unsigned char* p = reinterpret_cast<unsigned char*>(&value);
      std::reverse(p, p + sizeof(T));
    }
    offset_ += sizeof(T);
    return value;
  }

  std::size_t offset() const { return offset_; }
  std::size_t size() const { return bytes_.size(); }
  const std::string& path() const { return path_; }

 private:
  std::string path_;
  std::string bytes_;
  std::size_t offset_ = 0;
};

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError(path.string() + ": cannot open for reading");
  std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return bytes;
}

void atomic_write(const std::filesystem::path& path, const std::string& bytes) {
  const std::filesystem::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw FormatError(tmp.string() + ": cannot open for writing");
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!out) throw FormatError(tmp.string() + ": write failed");
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace

void write_hlxf(const std::filesystem::path& path, const Field& f) {
  validate(f);
  std::string out;
  out.reserve(16 + f.dims.size() * 16 + f.data.size() * 8);
  out.append("HLXF", 4);
  put_le<std::uint32_t>(out, kHlxfVersion);
  put_le<std::uint8_t>(out, static_cast<std::uint8_t>(f.dims.size()));
  for (auto d : f.dims) put_le<std::uint64_t>(out, static_cast<std::uint64_t>(d));
  for (auto s : f.steps) put_le<double>(out, s);
  for (auto v : f.data) put_le<double>(out, v);
  atomic_write(path, out);
}

Field read_hlxf(const std::filesystem::path& path) {
  Reader r(path, slurp(path));
  char magic[4];
  for (char& c : magic) c = static_cast<char>(r.take<std::uint8_t>("magic"));
  if (std::memcmp(magic, "HLXF", 4) != 0)
    throw FormatError(r.path() + ": bad magic at byte offset 0, not an HLXF file");
  const auto version = r.take<std::uint32_t>("version");
  if (version != kHlxfVersion)
    throw FormatError(r.path() + ": unsupported version " + std::to_string(version));
  const auto ndim = r.take<std::uint8_t>("ndim");
  if (ndim < 1 || ndim > 3)
    throw FormatError(r.path() + ": ndim must be 1..3, got " + std::to_string(ndim));

  std::vector<std::int64_t> dims(ndim);
  for (auto& d : dims) {
    const auto u = r.take<std::uint64_t>("dims");
    if (u == 0 || u > (1ull << 62))
      throw FormatError(r.path() + ": invalid axis length at byte offset " +
                        std::to_string(r.offset() - 8));
    d = static_cast<std::int64_t>(u);
  }
  std::vector<double> steps(ndim);
  for (auto& s : steps) s = r.take<double>("steps");

  const std::int64_t count = element_count(dims);
  const std::size_t expected = r.offset() + static_cast<std::size_t>(count) * 8;
  if (r.size() != expected)
    throw FormatError(r.path() + ": payload size mismatch at byte offset " +
                      std::to_string(r.offset()) + ": expected " + std::to_string(expected) +
                      " total bytes for " + std::to_string(count) + " samples, file has " +
                      std::to_string(r.size()));
  std::vector<double> data(static_cast<std::size_t>(count));
  for (auto& v : data) v = r.take<double>("samples");
  return make_field(std::move(dims), std::move(steps), std::move(data));
}

Field read_raw(const std::filesystem::path& path, std::vector<std::int64_t> dims,
               RawDType dtype, std::vector<double> steps) {
  const std::string bytes = slurp(path);
  const std::int64_t count = element_count(dims);
  const std::size_t sample_size = dtype == RawDType::F32 ? 4 : 8;
  const std::size_t expected = static_cast<std::size_t>(count) * sample_size;
  if (bytes.size() != expected)
    throw FormatError(path.string() + ": size mismatch: dims imply " + std::to_string(expected) +
                      " bytes (" + std::to_string(count) + " samples of " +
                      std::to_string(sample_size) + " bytes), file has " +
                      std::to_string(bytes.size()));
  if (steps.empty()) steps.assign(dims.size(), 1.0);
  std::vector<double> data(static_cast<std::size_t>(count));
  Reader r(path, bytes);
  if (dtype == RawDType::F32) {
    for (auto& v : data) v = static_cast<double>(r.take<float>("samples"));
  } else {
    for (auto& v : data) v = r.take<double>("samples");
  }
  return make_field(std::move(dims), std::move(steps), std::move(data));
}

void write_text_file(const std::filesystem::path& path, const std::string& content) {
  atomic_write(path, content);
}

}  // namespace helix
