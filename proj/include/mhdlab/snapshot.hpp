#pragma once

#include <filesystem>
#include <span>
#include <vector>

#include "mhdlab/field.hpp"

namespace mhdlab {

// Binary field snapshot, little-endian:
//   "MHDF" | version u32 | dim u32 | n u32 | box_len f64 | ncomp u32
//   followed by ncomp * n^dim f64 values, each component row-major.

inline constexpr std::uint32_t kSnapshotVersion = 1;

struct Snapshot {
  Grid grid;
  std::vector<ScalarField> components;
};

void write_snapshot(const std::filesystem::path& path,
                    std::span<const ScalarField> components);
/// Throws FormatError on a bad magic, version, truncated payload or a header
/// that does not describe a valid grid.
Snapshot read_snapshot(const std::filesystem::path& path);

/// Flattens scalars and vector components in argument order.
std::vector<ScalarField> snapshot_components(const ScalarField& s,
                                             std::span<const VectorField> vectors);
std::vector<ScalarField> snapshot_components(std::span<const VectorField> vectors);

}  // namespace mhdlab
