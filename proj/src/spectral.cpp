#include "mhdlab/spectral.hpp"

#include <cstdlib>
#include <map>
#include <memory>
#include <mutex>
#include <utility>

#include "mhdlab/errors.hpp"

namespace mhdlab {

namespace {

std::unique_ptr<Wavenumbers> build_wavenumbers(const Grid& g) {
  auto w = std::make_unique<Wavenumbers>();
  const int n = g.n();
  const int nh = n / 2 + 1;
  const std::size_t ns = g.spectral_size();
  const double k0 = g.k0();
  for (auto& axis : w->kd) axis.assign(ns, 0.0);
  w->kd2.assign(ns, 0.0);
  w->k2.assign(ns, 0.0);
  w->keep.assign(ns, 0);
  w->weight.assign(ns, 1.0);

  auto signed_mode = [n](int i) { return i <= n / 2 ? i : i - n; };
  const int outer = g.dim() == 3 ? n : 1;
  std::size_t idx = 0;
  for (int i0 = 0; i0 < n; ++i0) {
    for (int i1 = 0; i1 < outer; ++i1) {
      for (int il = 0; il < nh; ++il, ++idx) {
        std::array<int, 3> m{};
        if (g.dim() == 2) {
          m = {signed_mode(i0), il, 0};
        } else {
          m = {signed_mode(i0), signed_mode(i1), il};
        }
        bool keep = true;
        double k2 = 0.0;
        double kd2 = 0.0;
        for (int a = 0; a < g.dim(); ++a) {
          const double k = k0 * m[static_cast<std::size_t>(a)];
          const bool nyquist = std::abs(m[static_cast<std::size_t>(a)]) == n / 2;
          const double kd = nyquist ? 0.0 : k;
          w->kd[static_cast<std::size_t>(a)][idx] = kd;
          k2 += k * k;
          kd2 += kd * kd;
          if (3 * std::abs(m[static_cast<std::size_t>(a)]) >= n) keep = false;
        }
        w->k2[idx] = k2;
        w->kd2[idx] = kd2;
        w->keep[idx] = keep ? 1 : 0;
        w->weight[idx] = (il == 0 || il == n / 2) ? 1.0 : 2.0;
      }
    }
  }
  return w;
}

std::ptrdiff_t mode_count(const Spectrum& s) {
  return static_cast<std::ptrdiff_t>(s.data.size());
}

}  // namespace

const Wavenumbers& wavenumbers(const Grid& g) {
  static std::mutex mutex;
  static std::map<std::tuple<int, int, double>, std::unique_ptr<Wavenumbers>> cache;
  std::lock_guard lock(mutex);
  auto key = std::make_tuple(g.dim(), g.n(), g.box_len());
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, build_wavenumbers(g)).first;
  return *it->second;
}

namespace spectral {

void differentiate(Spectrum& s, int axis) {
  const auto& kd = wavenumbers(s.grid).kd[static_cast<std::size_t>(axis)];
  const auto n = mode_count(s);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const Complex z = s.data[i];
    s.data[i] = Complex(-kd[i] * z.imag(), kd[i] * z.real());
  }
}

Spectrum derivative(const Spectrum& s, int axis) {
  Spectrum out = s;
  differentiate(out, axis);
  return out;
}

void multiply(Spectrum& s, const std::vector<double>& factor) {
  const auto n = mode_count(s);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) s.data[i] *= factor[i];
}

void truncate(Spectrum& s) {
  const auto& keep = wavenumbers(s.grid).keep;
  const auto n = mode_count(s);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    if (!keep[i]) s.data[i] = 0.0;
  }
}

void truncate(VectorSpectrum& s) {
  for (auto& c : s) truncate(c);
}

void project_divergence_free(VectorSpectrum& v) {
  const Grid& g = v.front().grid;
  const auto& w = wavenumbers(g);
  const int dim = g.dim();
  const auto n = mode_count(v.front());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    if (w.kd2[i] == 0.0) continue;  // mean and pure-Nyquist modes belong to P
    Complex kv = 0.0;
    for (int a = 0; a < dim; ++a) kv += w.kd[a][i] * v[a].data[i];
    const Complex c = kv / w.kd2[i];
    for (int a = 0; a < dim; ++a) v[a].data[i] -= w.kd[a][i] * c;
  }
}

void project_gradient(VectorSpectrum& v) {
  const Grid& g = v.front().grid;
  const auto& w = wavenumbers(g);
  const int dim = g.dim();
  const auto n = mode_count(v.front());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    if (w.kd2[i] == 0.0) {
      for (int a = 0; a < dim; ++a) v[a].data[i] = 0.0;
      continue;
    }
    Complex kv = 0.0;
    for (int a = 0; a < dim; ++a) kv += w.kd[a][i] * v[a].data[i];
    const Complex c = kv / w.kd2[i];
    for (int a = 0; a < dim; ++a) v[a].data[i] = w.kd[a][i] * c;
  }
}

Spectrum divergence(const VectorSpectrum& v) {
  const Grid& g = v.front().grid;
  const auto& w = wavenumbers(g);
  Spectrum out(g);
  const auto n = mode_count(out);
  const int dim = g.dim();
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    Complex acc = 0.0;
    for (int a = 0; a < dim; ++a) acc += w.kd[a][i] * v[a].data[i];
    out.data[i] = Complex(-acc.imag(), acc.real());
  }
  return out;
}

void add_scaled(Spectrum& s, Complex c, const Spectrum& other) {
  const auto n = mode_count(s);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const Complex z = other.data[i];
    s.data[i] += Complex(c.real() * z.real() - c.imag() * z.imag(),
                         c.real() * z.imag() + c.imag() * z.real());
  }
}

}  // namespace spectral

VectorField gradient(const ScalarField& f) {
  const Spectrum fh = forward(f);
  std::vector<ScalarField> comps;
  for (int a = 0; a < f.grid().dim(); ++a) {
    comps.push_back(inverse(spectral::derivative(fh, a)));
  }
  return VectorField(std::move(comps));
}

ScalarField divergence(const VectorField& v) {
  return inverse(spectral::divergence(forward(v)));
}

ScalarField curl_2d(const VectorField& v) {
  if (v.dim() != 2) throw UsageError("curl_2d requires a 2D field");
  Spectrum a = spectral::derivative(forward(v[1]), 0);
  spectral::add_scaled(a, -1.0, spectral::derivative(forward(v[0]), 1));
  return inverse(a);
}

VectorField curl_3d(const VectorField& v) {
  if (v.dim() != 3) throw UsageError("curl_3d requires a 3D field");
  const VectorSpectrum vh = forward(v);
  std::vector<ScalarField> comps;
  for (int i = 0; i < 3; ++i) {
    const int j = (i + 1) % 3;
    const int k = (i + 2) % 3;
    // (curl v)_i = d_j v_k - d_k v_j
    Spectrum c = spectral::derivative(vh[k], j);
    spectral::add_scaled(c, -1.0, spectral::derivative(vh[j], k));
    comps.push_back(inverse(c));
  }
  return VectorField(std::move(comps));
}

ScalarField laplacian(const ScalarField& f) {
  Spectrum s = forward(f);
  const auto& k2 = wavenumbers(f.grid()).k2;
  const auto n = mode_count(s);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) s.data[i] *= -k2[i];
  return inverse(s);
}

VectorField laplacian(const VectorField& v) {
  std::vector<ScalarField> comps;
  for (const auto& c : v) comps.push_back(laplacian(c));
  return VectorField(std::move(comps));
}

std::vector<VectorField> jacobian(const VectorField& v) {
  std::vector<VectorField> out;
  for (const auto& c : v) out.push_back(gradient(c));
  return out;
}

VectorField helmholtz_P(const VectorField& v) {
  VectorSpectrum s = forward(v);
  spectral::project_divergence_free(s);
  return inverse(s);
}

VectorField helmholtz_Q(const VectorField& v) {
  VectorSpectrum s = forward(v);
  spectral::project_gradient(s);
  return inverse(s);
}

ScalarField dealias(const ScalarField& f) {
  Spectrum s = forward(f);
  spectral::truncate(s);
  return inverse(s);
}

VectorField dealias(const VectorField& v) {
  std::vector<ScalarField> comps;
  for (const auto& c : v) comps.push_back(dealias(c));
  return VectorField(std::move(comps));
}

}  // namespace mhdlab
