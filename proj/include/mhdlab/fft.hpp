#pragma once

#include <complex>
#include <vector>

#include "mhdlab/field.hpp"

namespace mhdlab {

using Complex = std::complex<double>;

/// Half-complex spectrum of a real field (unnormalized forward transform).
struct Spectrum {
  explicit Spectrum(const Grid& g) : grid(g), data(g.spectral_size()) {}

  Grid grid;
  std::vector<Complex> data;
};

using VectorSpectrum = std::vector<Spectrum>;

Spectrum forward(const ScalarField& f);
/// Inverse transform, normalized so that inverse(forward(f)) == f.
ScalarField inverse(const Spectrum& s);

VectorSpectrum forward(const VectorField& v);
VectorField inverse(const VectorSpectrum& s);

}  // namespace mhdlab
