#include "nlsa/snapshot.hpp"

#include <array>
#include <cstring>
#include <fstream>
#include <vector>

namespace nlsa {

namespace {

constexpr char kMagic[4] = {'N', 'L', 'S', 'A'};
constexpr std::size_t kHeaderBytes = 28;

template <typename T>
void put(std::string& buffer, T value) {
  static_assert(std::is_trivially_copyable_v<T>);
  char bytes[sizeof(T)];
  std::memcpy(bytes, &value, sizeof(T));
  buffer.append(bytes, sizeof(T));
}

template <typename T>
T take(const std::string& buffer, std::size_t& offset) {
  T value;
  std::memcpy(&value, buffer.data() + offset, sizeof(T));
  offset += sizeof(T);
  return value;
}

}  // namespace

void write_snapshot(const ComplexField& field, double t,
                    const std::filesystem::path& path) {
  const std::size_t n = field.grid->n_points();
  std::string buffer;
  buffer.reserve(kHeaderBytes + 16 * n);
  buffer.append(kMagic, 4);
  put<std::uint32_t>(buffer, kSnapshotVersion);
  put<std::uint32_t>(buffer, static_cast<std::uint32_t>(n));
  put<double>(buffer, field.grid->length());
  put<double>(buffer, t);
  for (const Complex& v : field.values) {
    put<double>(buffer, v.real());
    put<double>(buffer, v.imag());
  }

  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw SnapshotError("cannot write snapshot: " + path.string());
  out.write(buffer.data(), static_cast<std::streamsize>(buffer.size()));
  if (!out) throw SnapshotError("short write on snapshot: " + path.string());
}

std::pair<ComplexField, double> read_snapshot(
    const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw SnapshotError("cannot open snapshot: " + path.string());
  std::string buffer((std::istreambuf_iterator<char>(in)),
                     std::istreambuf_iterator<char>());

  if (buffer.size() < kHeaderBytes ||
      std::memcmp(buffer.data(), kMagic, 4) != 0) {
    throw SnapshotError("not a NLSA snapshot: " + path.string());
  }
  std::size_t offset = 4;
  const auto version = take<std::uint32_t>(buffer, offset);
  if (version != kSnapshotVersion) {
    throw SnapshotError("unsupported snapshot version " +
                        std::to_string(version));
  }
  const auto n = take<std::uint32_t>(buffer, offset);
  const auto length = take<double>(buffer, offset);
  const auto t = take<double>(buffer, offset);
  const std::size_t expected = kHeaderBytes + 16ULL * n;
  if (buffer.size() < expected) {
    throw SnapshotError("truncated NLSA snapshot: " + path.string());
  }
  if (buffer.size() > expected) {
    throw SnapshotError("snapshot size mismatch: " + path.string());
  }

  ComplexField field(make_grid(n, length));
  for (std::uint32_t j = 0; j < n; ++j) {
    const double re = take<double>(buffer, offset);
    const double im = take<double>(buffer, offset);
    field.values[j] = Complex(re, im);
  }
  return {std::move(field), t};
}

}  // namespace nlsa
