#include "mhdlab/fft.hpp"

#include <map>
#include <mutex>
#include <utility>

#include <fftw3.h>

namespace mhdlab {

namespace {

struct PlanPair {
  fftw_plan r2c = nullptr;
  fftw_plan c2r = nullptr;
};

// FFTW planning is not thread safe; execution with the new-array interface
// is. Plans are created once per (dim, n) and live for the whole process.
const PlanPair& plans_for(const Grid& g) {
  static std::mutex mutex;
  static std::map<std::pair<int, int>, PlanPair> cache;

  std::lock_guard lock(mutex);
  const auto key = std::make_pair(g.dim(), g.n());
  if (auto it = cache.find(key); it != cache.end()) return it->second;

  int dims[3] = {g.n(), g.n(), g.n()};
  auto* real = fftw_alloc_real(g.size());
  auto* cplx = fftw_alloc_complex(g.spectral_size());
  const unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
  PlanPair p;
  p.r2c = fftw_plan_dft_r2c(g.dim(), dims, real, cplx, flags);
  p.c2r = fftw_plan_dft_c2r(g.dim(), dims, cplx, real, flags);
  fftw_free(real);
  fftw_free(cplx);
  return cache.emplace(key, p).first->second;
}

}  // namespace

Spectrum forward(const ScalarField& f) {
  const auto& p = plans_for(f.grid());
  Spectrum s(f.grid());
  // r2c leaves its input intact for out-of-place transforms
  fftw_execute_dft_r2c(p.r2c, const_cast<double*>(f.values().data()),
                       reinterpret_cast<fftw_complex*>(s.data.data()));
  return s;
}

ScalarField inverse(const Spectrum& s) {
  const auto& p = plans_for(s.grid);
  std::vector<Complex> scratch = s.data;  // c2r destroys its input
  ScalarField f(s.grid);
  fftw_execute_dft_c2r(p.c2r, reinterpret_cast<fftw_complex*>(scratch.data()),
                       f.values().data());
  f *= 1.0 / static_cast<double>(s.grid.size());
  return f;
}

VectorSpectrum forward(const VectorField& v) {
  VectorSpectrum out;
  out.reserve(static_cast<std::size_t>(v.dim()));
  for (const auto& c : v) out.push_back(forward(c));
  return out;
}

VectorField inverse(const VectorSpectrum& s) {
  std::vector<ScalarField> comps;
  comps.reserve(s.size());
  for (const auto& c : s) comps.push_back(inverse(c));
  return VectorField(std::move(comps));
}

}  // namespace mhdlab
