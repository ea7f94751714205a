#include <doctest.h>

#include <cmath>

#include "mhdlab/acoustic.hpp"
#include "mhdlab/errors.hpp"
#include "mhdlab/initial_data.hpp"
#include "mhdlab/norms.hpp"
#include "mhdlab/pressure.hpp"
#include "mhdlab/spectral.hpp"
#include "test_support.hpp"

using namespace mhdlab;
using mhdlab::testing::rel_diff;

namespace {

AcousticState random_state(const Grid& g, std::uint64_t seed, double t = 0.0) {
  return AcousticState::from_fields(t, random_band_limited(g, seed, 10),
                                    random_band_limited(g, seed + 1, 10));
}

}  // namespace

TEST_CASE("propagation is an isometry and a group") {
  const Grid g(2, 32, 2.0 * M_PI);
  const PhysParams p = PhysParams::with_exponents(0.125, 0.5, 0.5, 1.4);
  const AcousticState s = random_state(g, 1);
  for (double t : {0.01, 0.37, 5.0}) {
    const AcousticState a = propagate(s, t, p);
    CHECK(isometry_check(a) <= 1e-12);
    CHECK(a.t() == t);
  }
  const AcousticState ab = propagate(propagate(s, 0.2, p), 0.55, p);
  const AcousticState c = propagate(s, 0.55, p);
  CHECK(l2_norm(ab.phi() - c.phi()) <= 1e-12 * l2_norm(s.phi()));
  CHECK(l2_norm(ab.g() - c.g()) <= 1e-12 * l2_norm(s.g()));
  const AcousticState back = propagate(c, 0.0, p);
  CHECK(l2_norm(back.phi() - s.phi()) <= 1e-12 * l2_norm(s.phi()));
}

TEST_CASE("single mode quarter period") {
  const Grid g(2, 32, 2.0 * M_PI);
  PhysParams p = PhysParams::with_exponents(0.125, 0.5, 0.5, 1.4);
  p.a = 0.9;  // sound speed != 1
  const int k = 3;
  const ScalarField phi0 = ScalarField::from_function(g, [&](double x, double, double) {
    return std::cos(k * x);
  });
  const AcousticState s = AcousticState::from_fields(0.0, phi0, ScalarField(g));
  const double omega = std::sqrt(p.a_gamma()) * k / p.eps;
  const AcousticState q = propagate(s, M_PI / (2.0 * omega), p);
  const VectorField expect = VectorField::from_function(g, [&](double x, double, double) {
    return std::array<double, 3>{std::sin(k * x), 0.0, 0.0};
  });
  CHECK(max_norm(q.phi()) <= 1e-13);
  CHECK(max_norm(q.g() - expect) <= 1e-13);
}

TEST_CASE("g is the gradient of q and q has zero mean") {
  const Grid g(2, 32, 2.0 * M_PI);
  const AcousticState s = random_state(g, 4);
  CHECK(std::abs(mean(s.q())) < 1e-15);
  CHECK(max_norm(s.g() - gradient(s.q())) < 1e-13);
  CHECK(helmholtz_P(s.g()).is_finite());
  CHECK(l2_norm(helmholtz_P(s.g())) < 1e-12 * l2_norm(s.g()));
}

TEST_CASE("well-prepared data gives the zero corrector") {
  const Grid g(2, 32, 2.0 * M_PI);
  const PhysParams p = PhysParams::with_exponents(0.125, 0.5, 0.5, 1.4);
  const AcousticState s =
      init_corrector(ScalarField(g, 1.0), orszag_tang_velocity(g), p, {2.0 * g.spacing()});
  CHECK(corrector_energy(s) < 1e-28);
  CHECK(isometry_check(s) == 0.0);
  CHECK(momentum_approximation_gap(ScalarField(g, 1.0), orszag_tang_velocity(g)) < 1e-13);
}

TEST_CASE("corrector initial data is the mollified Pi and gradient part") {
  const Grid g(2, 32, 2.0 * M_PI);
  const PhysParams p = PhysParams::with_exponents(0.125, 0.5, 0.5, 1.4);
  ScalarField rho(g, 1.0);
  rho.add_scaled(0.1 * p.eps, random_band_limited(g, 8, 5));
  const VectorField u = gradient(random_band_limited(g, 9, 5));
  const MollifierSpec m{3.0 * g.spacing()};
  const AcousticState s = init_corrector(rho, u, p, m);
  ScalarField pi(g);
  for (std::size_t i = 0; i < g.size(); ++i) pi[i] = pi_value(rho[i], p);
  CHECK(max_norm(s.phi() - mollify(pi, m)) < 1e-12 * max_norm(pi));
  VectorField su = u;
  for (int j = 0; j < 2; ++j) {
    for (std::size_t i = 0; i < g.size(); ++i) su[j][i] *= std::sqrt(rho[i]);
  }
  CHECK(max_norm(s.g() - mollify(helmholtz_Q(su), m)) < 1e-12 * max_norm(su));
}

TEST_CASE("dispersion probe window") {
  const Grid g(2, 32, 2.0 * M_PI);
  const PhysParams p = PhysParams::with_exponents(0.125, 0.5, 0.5, 1.4);
  const AcousticState s = random_state(g, 2);
  const double window = g.box_len() * p.eps / (2.0 * std::sqrt(p.a_gamma()));
  std::vector<AcousticState> inside, outside;
  for (int k = 0; k < 5; ++k) {
    inside.push_back(propagate(s, 0.2 * window * k, p));
    outside.push_back(propagate(s, 0.5 * window * k, p));
  }
  const DispersionReport a = dispersion_probe(inside, 4.0, p);
  CHECK(a.dispersive);
  CHECK(a.regime == "dispersive");
  CHECK(a.phi_norms.size() == 5);
  CHECK(a.decay_factor == doctest::Approx(a.phi_norms.back() / a.phi_norms.front()));
  const DispersionReport b = dispersion_probe(outside, 4.0, p);
  CHECK_FALSE(b.dispersive);
  CHECK(b.regime == "non-dispersive regime");
  CHECK_THROWS_AS(dispersion_probe(inside, 2.0, p), UsageError);
}

TEST_CASE("discrete Lebesgue norms") {
  const Grid g(2, 16, 2.0);
  const ScalarField c(g, 2.0);
  CHECK(lr_norm(c, 1.0) == doctest::Approx(8.0));
  CHECK(lr_norm(c, 4.0) == doctest::Approx(2.0 * std::pow(4.0, 0.25)));
  CHECK(lr_norm(c, INFINITY) == 2.0);
  CHECK(rel_diff(lr_norm(random_band_limited(g, 1, 4), 2.0), l2_norm(random_band_limited(g, 1, 4))) < 1e-14);
  CHECK_THROWS_AS(lr_norm(c, 0.5), UsageError);
}
