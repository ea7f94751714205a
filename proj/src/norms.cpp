#include "mhdlab/norms.hpp"

#include <cmath>

#include "mhdlab/errors.hpp"
#include "mhdlab/kernels.hpp"
#include "mhdlab/spectral.hpp"

namespace mhdlab {

namespace kp = kernels::parallel;

double integral(const ScalarField& f) {
  return kp::sum(f.values()) * f.grid().cell_volume();
}

double mean(const ScalarField& f) {
  return kp::sum(f.values()) / static_cast<double>(f.size());
}

double l2_norm(const ScalarField& f) {
  return std::sqrt(kp::sum_squares(f.values()) * f.grid().cell_volume());
}

double l2_norm(const VectorField& v) {
  double acc = 0.0;
  for (const auto& c : v) acc += kp::sum_squares(c.values());
  return std::sqrt(acc * v.grid().cell_volume());
}

double l2_inner(const ScalarField& f, const ScalarField& g) {
  require_same_grid(f.grid(), g.grid(), "l2_inner");
  return kp::dot(f.values(), g.values()) * f.grid().cell_volume();
}

double l2_inner(const VectorField& v, const VectorField& w) {
  require_same_grid(v.grid(), w.grid(), "l2_inner");
  double acc = 0.0;
  for (int j = 0; j < v.dim(); ++j) acc += kp::dot(v[j].values(), w[j].values());
  return acc * v.grid().cell_volume();
}

double max_norm(const ScalarField& f) { return kp::max_abs(f.values()); }

double max_norm(const VectorField& v) {
  double m = 0.0;
  for (const auto& c : v) m = std::max(m, max_norm(c));
  return m;
}

double spectral_l2_norm(const Spectrum& s) {
  const auto& w = wavenumbers(s.grid).weight;
  double acc = 0.0;
  for (std::size_t i = 0; i < s.data.size(); ++i) acc += w[i] * std::norm(s.data[i]);
  const double n = static_cast<double>(s.grid.size());
  return std::sqrt(acc * s.grid.cell_volume() / n);
}

double lq2_norm(const ScalarField& f, double q) {
  if (!(q >= 1.0)) throw UsageError("lq2_norm requires q >= 1");
  double small = 0.0;
  double large = 0.0;
  for (double v : f.values()) {
    const double a = std::abs(v);
    if (a < 0.5) {
      small += a * a;
    } else {
      large += std::pow(a, q);
    }
  }
  const double dv = f.grid().cell_volume();
  return std::sqrt(small * dv) + std::pow(large * dv, 1.0 / q);
}

}  // namespace mhdlab
