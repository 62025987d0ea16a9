#pragma once

#include <cstdint>
#include <filesystem>
#include <string>

#include "helix/field.hpp"

// HLXF volume container, little-endian throughout:
//   magic "HLXF" (4 bytes), version u32 = 1, ndim u8,
//   ndim x u64 dims, ndim x f64 steps,
//   product(dims) f64 samples in canonical layout (axis 0 fastest).

namespace helix {

inline constexpr std::uint32_t kHlxfVersion = 1;

/// Writes atomically (temp file + rename).
void write_hlxf(const std::filesystem::path& path, const Field& f);

/// Throws FormatError naming the byte offset on malformed or truncated input.
Field read_hlxf(const std::filesystem::path& path);

enum class RawDType : std::uint8_t { F32, F64 };

/// Imports a raw little-endian volume with caller-supplied dims; throws
/// FormatError naming expected vs actual byte counts on size mismatch.
Field read_raw(const std::filesystem::path& path, std::vector<std::int64_t> dims,
               RawDType dtype, std::vector<double> steps = {});

/// Atomic text write (temp file + rename).
void write_text_file(const std::filesystem::path& path, const std::string& content);

}  // namespace helix
