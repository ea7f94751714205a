#include "mhdlab/initial_data.hpp"

#include <cmath>
#include <random>

#include "mhdlab/fft.hpp"
#include "mhdlab/norms.hpp"
#include "mhdlab/spectral.hpp"

namespace mhdlab {

namespace {

// Uniform in [-1, 1) from raw generator bits (std distributions are not
// reproducible across standard libraries).
double uniform_pm1(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-52 - 1.0;
}

double unit_energy_scale(const VectorField& u, const VectorField& H) {
  const double e = 0.5 * (std::pow(l2_norm(u), 2) + std::pow(l2_norm(H), 2));
  return std::sqrt(u.grid().volume() / e);
}

ScalarField random_modes(const Grid& g, std::uint64_t seed, auto&& admit) {
  std::mt19937_64 rng(seed);
  const int n = g.n();
  const int nh = n / 2 + 1;
  const int outer = g.dim() == 3 ? n : 1;
  auto signed_mode = [n](int i) { return i <= n / 2 ? i : i - n; };
  Spectrum s(g);
  std::size_t idx = 0;
  for (int i0 = 0; i0 < n; ++i0) {
    for (int i1 = 0; i1 < outer; ++i1) {
      for (int il = 0; il < nh; ++il, ++idx) {
        const std::array<int, 3> m = g.dim() == 2
                                         ? std::array<int, 3>{signed_mode(i0), il, 0}
                                         : std::array<int, 3>{signed_mode(i0), signed_mode(i1), il};
        if (!admit(m)) continue;
        const double re = uniform_pm1(rng);
        const double im = uniform_pm1(rng);
        s.data[idx] = Complex(re, im);
      }
    }
  }
  // Imaginary parts on self-conjugate modes are dropped by the c2r transform;
  // the inverse yields a real field regardless.
  s.data[0] = 0.0;
  return inverse(s);
}

}  // namespace

VectorField orszag_tang_velocity(const Grid& g) {
  const double k = g.k0();
  VectorField u = VectorField::from_function(g, [k](double x, double y, double) {
    return std::array<double, 3>{-std::sin(k * y), std::sin(k * x), 0.0};
  });
  return u;
}

VectorField orszag_tang_field(const Grid& g) {
  const double k = g.k0();
  const bool three = g.dim() == 3;
  return VectorField::from_function(g, [k, three](double x, double y, double z) {
    const double sz = three ? std::sin(k * z) : 0.0;
    return std::array<double, 3>{-std::sin(k * y) + sz, std::sin(2.0 * k * x) + sz, 0.0};
  });
}

ScalarField random_profile(const Grid& g, std::uint64_t seed) {
  ScalarField f = random_modes(g, seed, [&](const std::array<int, 3>& m) {
    int mx = 0;
    for (int a = 0; a < g.dim(); ++a) mx = std::max(mx, std::abs(m[static_cast<std::size_t>(a)]));
    return mx >= 1 && mx <= 3;
  });
  f *= 1.0 / max_norm(f);
  return f;
}

ScalarField random_band_limited(const Grid& g, std::uint64_t seed, int kmax) {
  return random_modes(g, seed, [&](const std::array<int, 3>& m) {
    for (int a = 0; a < g.dim(); ++a) {
      if (std::abs(m[static_cast<std::size_t>(a)]) >= kmax) return false;
    }
    return true;
  });
}

InitialData make_initial_data(const RunConfig& cfg, double eps) {
  const Grid g = cfg.grid();
  VectorField u0 = orszag_tang_velocity(g);
  VectorField H0 = orszag_tang_field(g);
  const double scale = unit_energy_scale(u0, H0);
  u0 *= scale;
  H0 *= scale;

  ScalarField rho(g, 1.0);
  VectorField u = u0;
  if (cfg.init_kind == InitKind::general && cfg.amp_acoustic > 0.0) {
    const ScalarField psi = random_profile(g, cfg.seed);
    const ScalarField chi = random_profile(g, cfg.seed + 1);
    rho.add_scaled(eps * cfg.amp_acoustic, psi);
    u.add_scaled(cfg.amp_acoustic, gradient(chi));
  }
  CompressibleState c{0.0, rho, rho * u, H0};
  IdealState i{0.0, helmholtz_P(u), H0};
  // u0 is analytically divergence-free; projecting the limit data only strips
  // the acoustic gradient, leaving u0 to rounding.
  return {std::move(c), std::move(i)};
}

}  // namespace mhdlab
