#pragma once

// Ideal incompressible MHD,
//   d_t u + (u.grad)u - (H.grad)H + grad(p + |H|^2/2) = 0,
//   d_t H + (u.grad)H - (H.grad)u = 0,   div u = div H = 0,
// advanced with RK4 and a Leray projection at every stage. The pressure is
// never stored: projecting the momentum nonlinearity removes every gradient.

#include "mhdlab/field.hpp"

namespace mhdlab {

struct IdealState {
  double t = 0.0;
  VectorField u;
  VectorField H;
};

struct IdealDerivative {
  VectorField du;
  VectorField dH;
};

/// du = P[(H.grad)H - (u.grad)u], dH = P[(H.grad)u - (u.grad)H], de-aliased.
IdealDerivative rhs_ideal(const IdealState& s);

/// One RK4 step; dt may be negative (time reversal). Throws StepSizeError if
/// |dt| > cfl * h / max(|u| + |H|).
IdealState step_ideal(const IdealState& s, double dt, double cfl = 0.5);

/// 1/2 int (|u|^2 + |H|^2)
double energy_ideal(const IdealState& s);
/// int u . H
double cross_helicity(const IdealState& s);

/// grad(p + |H|^2/2) = Q[(H.grad)H - (u.grad)u], recovered on demand.
VectorField total_pressure_gradient(const IdealState& s);

/// max_{i,j,x} |d_j u_i|
double gradient_max_norm(const VectorField& u);

}  // namespace mhdlab
