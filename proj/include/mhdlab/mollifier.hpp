#pragma once

#include <vector>

#include "mhdlab/field.hpp"

namespace mhdlab {

enum class MollifierKind { bump, gaussian_truncated };

/// Friedrichs mollifier chi^delta(x) = delta^{-d} chi(x / delta) with
/// supp chi in the unit ball.
struct MollifierSpec {
  double delta = 0.0;
  MollifierKind kind = MollifierKind::bump;

  /// Throws ConfigError unless 0 < delta < box_len / 4.
  void validate(const Grid& g) const;
};

/// Kernel sampled at grid points (periodic minimum-image distance), nonnegative
/// and normalized so that its values sum to one.
ScalarField mollifier_kernel(const Grid& g, const MollifierSpec& m);

/// Discrete Fourier coefficients of the kernel, indexed like Spectrum::data.
/// Real because the kernel is even; the mean coefficient is exactly 1.
std::vector<double> mollifier_spectrum(const Grid& g, const MollifierSpec& m);

/// Periodic convolution with the discrete kernel, applied as a Fourier
/// multiplier. Commutes with every other Fourier multiplier (P, Q, grad, ...).
ScalarField mollify(const ScalarField& f, const MollifierSpec& m);
VectorField mollify(const VectorField& v, const MollifierSpec& m);

}  // namespace mhdlab
