#pragma once

#include <filesystem>
#include <stdexcept>
#include <utility>

#include "nlsa/field.hpp"

namespace nlsa {

class SnapshotError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::uint32_t kSnapshotVersion = 1;

/// Fixed little-endian binary state file, 28 + 16 n bytes:
///   "NLSA" | u32 version | u32 n_points | f64 length | f64 t |
///   n interleaved (re, im) f64 pairs.
void write_snapshot(const ComplexField& field, double t,
                    const std::filesystem::path& path);

/// Bit-exact inverse of write_snapshot. Throws SnapshotError on a bad
/// magic, version mismatch, or truncated/oversized file.
std::pair<ComplexField, double> read_snapshot(const std::filesystem::path& path);

}  // namespace nlsa
