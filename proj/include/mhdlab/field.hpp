#pragma once

#include <array>
#include <functional>
#include <span>
#include <vector>

#include "mhdlab/grid.hpp"

namespace mhdlab {

/// Real scalar field sampled on a periodic grid (physical space).
class ScalarField {
 public:
  explicit ScalarField(const Grid& grid, double value = 0.0);
  ScalarField(const Grid& grid, std::vector<double> values);

  using Function = std::function<double(double, double, double)>;
  static ScalarField from_function(const Grid& grid, const Function& f);

  const Grid& grid() const { return grid_; }
  std::size_t size() const { return values_.size(); }
  std::span<const double> values() const { return values_; }
  std::span<double> values() { return values_; }

  double& operator[](std::size_t i) { return values_[i]; }
  double operator[](std::size_t i) const { return values_[i]; }

  bool is_finite() const;

  ScalarField& operator+=(const ScalarField& other);
  ScalarField& operator-=(const ScalarField& other);
  ScalarField& operator*=(double s);
  ScalarField& operator+=(double s);

  /// this += s * other
  ScalarField& add_scaled(double s, const ScalarField& other);

 private:
  Grid grid_;
  std::vector<double> values_;
};

ScalarField operator+(ScalarField a, const ScalarField& b);
ScalarField operator-(ScalarField a, const ScalarField& b);
ScalarField operator*(double s, ScalarField a);
/// Pointwise product.
ScalarField operator*(const ScalarField& a, const ScalarField& b);
/// Pointwise quotient.
ScalarField operator/(const ScalarField& a, const ScalarField& b);

/// Field with dim components on a shared grid.
class VectorField {
 public:
  explicit VectorField(const Grid& grid);
  explicit VectorField(std::vector<ScalarField> components);

  using Function = std::function<std::array<double, 3>(double, double, double)>;
  static VectorField from_function(const Grid& grid, const Function& f);

  const Grid& grid() const { return components_.front().grid(); }
  int dim() const { return static_cast<int>(components_.size()); }

  ScalarField& operator[](int j) { return components_[static_cast<std::size_t>(j)]; }
  const ScalarField& operator[](int j) const {
    return components_[static_cast<std::size_t>(j)];
  }

  bool is_finite() const;

  VectorField& operator+=(const VectorField& other);
  VectorField& operator-=(const VectorField& other);
  VectorField& operator*=(double s);
  VectorField& add_scaled(double s, const VectorField& other);

  auto begin() { return components_.begin(); }
  auto end() { return components_.end(); }
  auto begin() const { return components_.begin(); }
  auto end() const { return components_.end(); }

 private:
  std::vector<ScalarField> components_;
};

VectorField operator+(VectorField a, const VectorField& b);
VectorField operator-(VectorField a, const VectorField& b);
VectorField operator*(double s, VectorField a);
/// Scales every component pointwise by f.
VectorField operator*(const ScalarField& f, const VectorField& v);

ScalarField dot(const VectorField& a, const VectorField& b);
/// Pointwise |v|.
ScalarField magnitude(const VectorField& v);

void require_same_grid(const Grid& a, const Grid& b, const char* what);

}  // namespace mhdlab
