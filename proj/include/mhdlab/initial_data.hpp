#pragma once

#include <cstdint>

#include "mhdlab/compressible.hpp"
#include "mhdlab/config.hpp"
#include "mhdlab/ideal.hpp"

namespace mhdlab {

struct InitialData {
  CompressibleState compressible;
  IdealState ideal;
};

/// Orszag-Tang pair on the box (2D: u = (-sin k0 y, sin k0 x),
/// H = (-sin k0 y, sin 2 k0 x); 3D adds sin k0 z couplings to H), scaled to
/// mean energy density 1/2 (|u|^2 + |H|^2) = 1.
VectorField orszag_tang_velocity(const Grid& g);
VectorField orszag_tang_field(const Grid& g);

/// Mean-zero band-limited profile with modes 1 <= max_j |m_j| <= 3, drawn
/// deterministically from `seed` and normalized to max |f| = 1.
ScalarField random_profile(const Grid& g, std::uint64_t seed);

/// Random band-limited field with modes |m_j| < kmax in every axis (test and
/// benchmark helper); mean zero.
ScalarField random_band_limited(const Grid& g, std::uint64_t seed, int kmax);

/// well_prepared: rho = 1, u = u0, H = H0.
/// general: rho = 1 + eps amp psi, u = u0 + amp grad chi, H = H0.
/// The ideal data is (P(u0 + amp grad chi), H0) = (u0, H0) in both cases.
InitialData make_initial_data(const RunConfig& cfg, double eps);

}  // namespace mhdlab
