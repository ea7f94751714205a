#pragma once

#include "mhdlab/params.hpp"

namespace mhdlab {

/// rho^gamma - 1 - gamma (rho - 1), evaluated without catastrophic
/// cancellation near rho = 1. Nonnegative for rho > 0.
double pressure_potential(double rho, double gamma);

/// Pointwise density surrogate
///   (1/eps) sqrt( 2a/(gamma-1) * pressure_potential(rho) ),
/// multiplied by sign(rho - 1) when `signed_variant` is set.
double pi_value(double rho, const PhysParams& p, bool signed_variant = true);

}  // namespace mhdlab
