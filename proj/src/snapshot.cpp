#include "mhdlab/snapshot.hpp"

#include <bit>
#include <cstring>
#include <fstream>

#include "mhdlab/errors.hpp"

namespace mhdlab {

namespace {

template <class T>
T to_little(T v) {
  if constexpr (std::endian::native == std::endian::little) {
    return v;
  } else {
    unsigned char b[sizeof(T)];
    std::memcpy(b, &v, sizeof(T));
    for (std::size_t i = 0; i < sizeof(T) / 2; ++i) std::swap(b[i], b[sizeof(T) - 1 - i]);
    std::memcpy(&v, b, sizeof(T));
    return v;
  }
}

template <class T>
void put(std::ostream& os, T v) {
  v = to_little(v);
  os.write(reinterpret_cast<const char*>(&v), sizeof(T));
}

template <class T>
T get(std::istream& is) {
  T v{};
  if (!is.read(reinterpret_cast<char*>(&v), sizeof(T))) {
    throw FormatError("snapshot: truncated header");
  }
  return to_little(v);
}

}  // namespace

void write_snapshot(const std::filesystem::path& path,
                    std::span<const ScalarField> components) {
  if (components.empty()) throw UsageError("write_snapshot: no components");
  const Grid& g = components.front().grid();
  for (const auto& c : components) require_same_grid(g, c.grid(), "write_snapshot");

  std::ofstream os(path, std::ios::binary);
  if (!os) throw Error("write_snapshot: cannot open " + path.string());
  os.write("MHDF", 4);
  put<std::uint32_t>(os, kSnapshotVersion);
  put<std::uint32_t>(os, static_cast<std::uint32_t>(g.dim()));
  put<std::uint32_t>(os, static_cast<std::uint32_t>(g.n()));
  put<double>(os, g.box_len());
  put<std::uint32_t>(os, static_cast<std::uint32_t>(components.size()));
  for (const auto& c : components) {
    for (double v : c.values()) put<double>(os, v);
  }
  if (!os) throw Error("write_snapshot: write failed for " + path.string());
}

Snapshot read_snapshot(const std::filesystem::path& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw FormatError("read_snapshot: cannot open " + path.string());
  char magic[4];
  if (!is.read(magic, 4) || std::memcmp(magic, "MHDF", 4) != 0) {
    throw FormatError("read_snapshot: bad magic");
  }
  const auto version = get<std::uint32_t>(is);
  if (version != kSnapshotVersion) throw FormatError("read_snapshot: unsupported version");
  const auto dim = get<std::uint32_t>(is);
  const auto n = get<std::uint32_t>(is);
  const auto box_len = get<double>(is);
  const auto ncomp = get<std::uint32_t>(is);

  Snapshot snap{[&] {
    try {
      return Grid(static_cast<int>(dim), static_cast<int>(n), box_len);
    } catch (const ConfigError& e) {
      throw FormatError(std::string("read_snapshot: invalid grid: ") + e.what());
    }
  }(), {}};
  if (ncomp == 0 || ncomp > 64) throw FormatError("read_snapshot: bad component count");
  for (std::uint32_t c = 0; c < ncomp; ++c) {
    std::vector<double> values(snap.grid.size());
    for (double& v : values) {
      double raw{};
      if (!is.read(reinterpret_cast<char*>(&raw), sizeof(double))) {
        throw FormatError("read_snapshot: truncated payload");
      }
      v = to_little(raw);
    }
    snap.components.emplace_back(snap.grid, std::move(values));
  }
  return snap;
}

std::vector<ScalarField> snapshot_components(const ScalarField& s,
                                             std::span<const VectorField> vectors) {
  std::vector<ScalarField> out{s};
  for (const auto& v : vectors) {
    for (const auto& c : v) out.push_back(c);
  }
  return out;
}

std::vector<ScalarField> snapshot_components(std::span<const VectorField> vectors) {
  std::vector<ScalarField> out;
  for (const auto& v : vectors) {
    for (const auto& c : v) out.push_back(c);
  }
  return out;
}

}  // namespace mhdlab
