#include "mhdlab/mollifier.hpp"

#include <cmath>

#include "mhdlab/errors.hpp"
#include "mhdlab/fft.hpp"
#include "mhdlab/kernels.hpp"
#include "mhdlab/spectral.hpp"

namespace mhdlab {

namespace {

// Profiles on the unit ball, unnormalized; zero for r >= 1.
double profile(MollifierKind kind, double r2) {
  if (r2 >= 1.0) return 0.0;
  switch (kind) {
    case MollifierKind::bump:
      return std::exp(-1.0 / (1.0 - r2));
    case MollifierKind::gaussian_truncated:
      return std::exp(-4.5 * r2);  // sigma = 1/3
  }
  return 0.0;
}

}  // namespace

void MollifierSpec::validate(const Grid& g) const {
  if (!(delta > 0.0) || !(delta < g.box_len() / 4.0)) {
    throw ConfigError("mollifier delta must lie in (0, box_len/4)");
  }
}

ScalarField mollifier_kernel(const Grid& g, const MollifierSpec& m) {
  m.validate(g);
  ScalarField k(g);
  const int n = g.n();
  const double h = g.spacing();
  for (std::size_t i = 0; i < k.size(); ++i) {
    const auto idx = g.index(i);
    double r2 = 0.0;
    for (int a = 0; a < g.dim(); ++a) {
      const int ia = idx[static_cast<std::size_t>(a)];
      const double d = std::min(ia, n - ia) * h / m.delta;
      r2 += d * d;
    }
    k[i] = profile(m.kind, r2);
  }
  const double total = kernels::serial::sum(k.values());
  k *= 1.0 / total;
  return k;
}

std::vector<double> mollifier_spectrum(const Grid& g, const MollifierSpec& m) {
  const Spectrum s = forward(mollifier_kernel(g, m));
  std::vector<double> out(s.data.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = s.data[i].real();
  out[0] = 1.0;
  return out;
}

ScalarField mollify(const ScalarField& f, const MollifierSpec& m) {
  Spectrum s = forward(f);
  spectral::multiply(s, mollifier_spectrum(f.grid(), m));
  return inverse(s);
}

VectorField mollify(const VectorField& v, const MollifierSpec& m) {
  const auto factor = mollifier_spectrum(v.grid(), m);
  VectorSpectrum s = forward(v);
  for (auto& c : s) spectral::multiply(c, factor);
  return inverse(s);
}

}  // namespace mhdlab
