#pragma once

// Spectral calculus on the periodic grid.
//
// First derivatives use wavenumbers with the Nyquist mode zeroed so that
// odd-derivative spectra stay Hermitian; the Laplacian multiplies by the true
// -|k|^2. For fields without Nyquist content (everything band-limited, and all
// de-aliased products) the two conventions agree exactly.

#include <array>
#include <cstdint>
#include <vector>

#include "mhdlab/fft.hpp"

namespace mhdlab {

struct Wavenumbers {
  /// Derivative wavenumbers per axis, indexed like Spectrum::data.
  std::array<std::vector<double>, 3> kd;
  /// |kd|^2
  std::vector<double> kd2;
  /// True |k|^2 (Nyquist included).
  std::vector<double> k2;
  /// 2/3-rule mask: 1 where every |m_j| < n/3.
  std::vector<std::uint8_t> keep;
  /// Multiplicity of each half-complex mode in the full spectrum (1 or 2).
  std::vector<double> weight;
};

/// Cached per grid; safe to call concurrently.
const Wavenumbers& wavenumbers(const Grid& g);

VectorField gradient(const ScalarField& f);
ScalarField divergence(const VectorField& v);
/// d v2/dx - d v1/dy; requires dim == 2.
ScalarField curl_2d(const VectorField& v);
/// Requires dim == 3.
VectorField curl_3d(const VectorField& v);
ScalarField laplacian(const ScalarField& f);
VectorField laplacian(const VectorField& v);

/// jac[i][j] = d v_i / d x_j
std::vector<VectorField> jacobian(const VectorField& v);

/// Gradient part Q v = grad lap^{-1} div v. The k = 0 mode goes to P.
VectorField helmholtz_Q(const VectorField& v);
/// Divergence-free part P v = v - Q v.
VectorField helmholtz_P(const VectorField& v);

/// 2/3-rule truncation.
ScalarField dealias(const ScalarField& f);
VectorField dealias(const VectorField& v);

namespace spectral {

// In-place building blocks shared by the solvers. All loops are OpenMP
// parallel over modes.

/// s <- i kd_axis s
void differentiate(Spectrum& s, int axis);
Spectrum derivative(const Spectrum& s, int axis);
void multiply(Spectrum& s, const std::vector<double>& factor);
void truncate(Spectrum& s);
void truncate(VectorSpectrum& s);
/// Removes the gradient part in place (v <- P v).
void project_divergence_free(VectorSpectrum& v);
/// Keeps only the gradient part in place (v <- Q v).
void project_gradient(VectorSpectrum& v);
/// Returns i kd . v
Spectrum divergence(const VectorSpectrum& v);
/// s <- s + c * other
void add_scaled(Spectrum& s, Complex c, const Spectrum& other);

}  // namespace spectral

}  // namespace mhdlab
