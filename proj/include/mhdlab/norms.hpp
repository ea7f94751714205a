#pragma once

#include "mhdlab/fft.hpp"
#include "mhdlab/field.hpp"

namespace mhdlab {

// Quadrature is the uniform cell sum times the cell volume, which is
// spectrally accurate for periodic fields. Summation order is fixed.

double integral(const ScalarField& f);
double mean(const ScalarField& f);

double l2_norm(const ScalarField& f);
double l2_norm(const VectorField& v);
double l2_inner(const ScalarField& f, const ScalarField& g);
double l2_inner(const VectorField& v, const VectorField& w);

/// max |f(x)|
double max_norm(const ScalarField& f);
/// Largest absolute component value over all points.
double max_norm(const VectorField& v);

/// L^2 norm evaluated from a spectrum via Parseval.
double spectral_l2_norm(const Spectrum& s);

/// (int |f|^2 1{|f| < 1/2})^{1/2} + (int |f|^q 1{|f| >= 1/2})^{1/q}.
/// Throws UsageError for q < 1.
double lq2_norm(const ScalarField& f, double q);

}  // namespace mhdlab
