#include "mhdlab/field.hpp"

#include <cmath>
#include <string>

#include "mhdlab/errors.hpp"
#include "mhdlab/kernels.hpp"

namespace mhdlab {

namespace kp = kernels::parallel;

void require_same_grid(const Grid& a, const Grid& b, const char* what) {
  if (!(a == b)) throw UsageError(std::string(what) + ": grid mismatch");
}

ScalarField::ScalarField(const Grid& grid, double value)
    : grid_(grid), values_(grid.size(), value) {}

ScalarField::ScalarField(const Grid& grid, std::vector<double> values)
    : grid_(grid), values_(std::move(values)) {
  if (values_.size() != grid_.size()) {
    throw UsageError("ScalarField: value count does not match grid");
  }
}

ScalarField ScalarField::from_function(const Grid& grid, const Function& f) {
  ScalarField out(grid);
  for (std::size_t i = 0; i < out.size(); ++i) {
    const auto x = grid.point(i);
    out[i] = f(x[0], x[1], x[2]);
  }
  return out;
}

bool ScalarField::is_finite() const {
  for (double v : values_) {
    if (!std::isfinite(v)) return false;
  }
  return true;
}

ScalarField& ScalarField::operator+=(const ScalarField& other) {
  return add_scaled(1.0, other);
}

ScalarField& ScalarField::operator-=(const ScalarField& other) {
  return add_scaled(-1.0, other);
}

ScalarField& ScalarField::operator*=(double s) {
  kp::axpby(s, values_, 0.0, values_, values_);
  return *this;
}

ScalarField& ScalarField::operator+=(double s) {
  for (double& v : values_) v += s;
  return *this;
}

ScalarField& ScalarField::add_scaled(double s, const ScalarField& other) {
  require_same_grid(grid_, other.grid_, "ScalarField arithmetic");
  kp::axpby(1.0, values_, s, other.values_, values_);
  return *this;
}

ScalarField operator+(ScalarField a, const ScalarField& b) { return a += b; }
ScalarField operator-(ScalarField a, const ScalarField& b) { return a -= b; }
ScalarField operator*(double s, ScalarField a) { return a *= s; }

ScalarField operator*(const ScalarField& a, const ScalarField& b) {
  require_same_grid(a.grid(), b.grid(), "ScalarField product");
  ScalarField out(a.grid());
  kp::multiply(a.values(), b.values(), out.values());
  return out;
}

ScalarField operator/(const ScalarField& a, const ScalarField& b) {
  require_same_grid(a.grid(), b.grid(), "ScalarField quotient");
  ScalarField out(a.grid());
  kp::divide(a.values(), b.values(), out.values());
  return out;
}

VectorField::VectorField(const Grid& grid)
    : components_(static_cast<std::size_t>(grid.dim()), ScalarField(grid)) {}

VectorField::VectorField(std::vector<ScalarField> components)
    : components_(std::move(components)) {
  if (components_.empty()) throw UsageError("VectorField: no components");
  const Grid& g = components_.front().grid();
  if (static_cast<int>(components_.size()) != g.dim()) {
    throw UsageError("VectorField: component count must equal grid dim");
  }
  for (const auto& c : components_) require_same_grid(g, c.grid(), "VectorField");
}

VectorField VectorField::from_function(const Grid& grid, const Function& f) {
  VectorField out(grid);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const auto x = grid.point(i);
    const auto v = f(x[0], x[1], x[2]);
    for (int j = 0; j < grid.dim(); ++j) out[j][i] = v[static_cast<std::size_t>(j)];
  }
  return out;
}

bool VectorField::is_finite() const {
  for (const auto& c : components_) {
    if (!c.is_finite()) return false;
  }
  return true;
}

VectorField& VectorField::operator+=(const VectorField& other) {
  return add_scaled(1.0, other);
}

VectorField& VectorField::operator-=(const VectorField& other) {
  return add_scaled(-1.0, other);
}

VectorField& VectorField::operator*=(double s) {
  for (auto& c : components_) c *= s;
  return *this;
}

VectorField& VectorField::add_scaled(double s, const VectorField& other) {
  if (other.dim() != dim()) throw UsageError("VectorField arithmetic: dim mismatch");
  for (int j = 0; j < dim(); ++j) (*this)[j].add_scaled(s, other[j]);
  return *this;
}

VectorField operator+(VectorField a, const VectorField& b) { return a += b; }
VectorField operator-(VectorField a, const VectorField& b) { return a -= b; }
VectorField operator*(double s, VectorField a) { return a *= s; }

VectorField operator*(const ScalarField& f, const VectorField& v) {
  VectorField out(v.grid());
  for (int j = 0; j < v.dim(); ++j) out[j] = f * v[j];
  return out;
}

ScalarField dot(const VectorField& a, const VectorField& b) {
  require_same_grid(a.grid(), b.grid(), "dot");
  ScalarField out(a.grid());
  for (int j = 0; j < a.dim(); ++j) {
    kp::multiply_add(a[j].values(), b[j].values(), out.values());
  }
  return out;
}

ScalarField magnitude(const VectorField& v) {
  ScalarField out = dot(v, v);
  for (double& x : out.values()) x = std::sqrt(x);
  return out;
}

}  // namespace mhdlab
