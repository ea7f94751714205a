#pragma once

#include <array>
#include <cstddef>

namespace mhdlab {

/// Uniform periodic box [0, box_len)^dim with n points per axis.
///
/// Physical arrays are row-major with the last axis fastest:
/// flat = (ix * n + iy) * n + iz. Spectral (half-complex) arrays share the
/// same order but the last axis holds only n/2 + 1 modes.
class Grid {
 public:
  /// Throws ConfigError unless dim is 2 or 3, n >= 8 is a power of two and
  /// box_len > 0.
  Grid(int dim, int n, double box_len);

  int dim() const { return dim_; }
  int n() const { return n_; }
  double box_len() const { return box_len_; }
  double spacing() const { return box_len_ / n_; }

  std::size_t size() const { return size_; }
  std::size_t spectral_size() const { return spectral_size_; }
  double cell_volume() const;
  double volume() const;

  /// Base wavenumber 2*pi/box_len.
  double k0() const;

  /// Integer grid indices of a flat physical index (unused axes are 0).
  std::array<int, 3> index(std::size_t flat) const;
  /// Coordinates of a flat physical index (unused axes are 0).
  std::array<double, 3> point(std::size_t flat) const;

  bool operator==(const Grid& other) const = default;

 private:
  int dim_;
  int n_;
  double box_len_;
  std::size_t size_;
  std::size_t spectral_size_;
};

}  // namespace mhdlab
