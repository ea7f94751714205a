#include "mhdlab/grid.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "mhdlab/errors.hpp"

namespace mhdlab {

namespace {

bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

}  // namespace

Grid::Grid(int dim, int n, double box_len) : dim_(dim), n_(n), box_len_(box_len) {
  if (dim != 2 && dim != 3) {
    throw ConfigError("grid dim must be 2 or 3, got " + std::to_string(dim));
  }
  if (n < 8 || !is_power_of_two(n)) {
    throw ConfigError("grid n must be a power of two >= 8, got " + std::to_string(n));
  }
  if (!(box_len > 0.0) || !std::isfinite(box_len)) {
    throw ConfigError("grid box_len must be positive");
  }
  const auto nn = static_cast<std::size_t>(n);
  size_ = nn * nn * (dim == 3 ? nn : 1);
  spectral_size_ = (nn / 2 + 1) * nn * (dim == 3 ? nn : 1);
}

double Grid::cell_volume() const { return std::pow(spacing(), dim_); }

double Grid::volume() const { return std::pow(box_len_, dim_); }

double Grid::k0() const { return 2.0 * std::numbers::pi / box_len_; }

std::array<int, 3> Grid::index(std::size_t flat) const {
  const auto nn = static_cast<std::size_t>(n_);
  if (dim_ == 2) {
    return {static_cast<int>(flat / nn), static_cast<int>(flat % nn), 0};
  }
  return {static_cast<int>(flat / (nn * nn)), static_cast<int>((flat / nn) % nn),
          static_cast<int>(flat % nn)};
}

std::array<double, 3> Grid::point(std::size_t flat) const {
  const auto idx = index(flat);
  const double h = spacing();
  return {idx[0] * h, idx[1] * h, idx[2] * h};
}

}  // namespace mhdlab
