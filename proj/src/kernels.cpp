#include "mhdlab/kernels.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <vector>

#include <omp.h>

namespace mhdlab::kernels {

namespace {

std::size_t block_count(std::size_t n) {
  return (n + kReductionBlock - 1) / kReductionBlock;
}

// Partial for block b, always accumulated left to right.
template <class Term>
double block_partial(std::size_t b, std::size_t n, Term term) {
  const std::size_t lo = b * kReductionBlock;
  const std::size_t hi = std::min(n, lo + kReductionBlock);
  double acc = 0.0;
  for (std::size_t i = lo; i < hi; ++i) acc += term(i);
  return acc;
}

template <class Term>
double blocked_sum_serial(std::size_t n, Term term) {
  const std::size_t nb = block_count(n);
  double total = 0.0;
  for (std::size_t b = 0; b < nb; ++b) total += block_partial(b, n, term);
  return total;
}

template <class Term>
double blocked_sum_parallel(std::size_t n, Term term) {
  const std::size_t nb = block_count(n);
  std::vector<double> partial(nb, 0.0);
  const auto nbs = static_cast<std::ptrdiff_t>(nb);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t b = 0; b < nbs; ++b) {
    partial[static_cast<std::size_t>(b)] =
        block_partial(static_cast<std::size_t>(b), n, term);
  }
  double total = 0.0;
  for (double p : partial) total += p;
  return total;
}

}  // namespace

namespace serial {

double sum(std::span<const double> x) {
  return blocked_sum_serial(x.size(), [&](std::size_t i) { return x[i]; });
}

double sum_squares(std::span<const double> x) {
  return blocked_sum_serial(x.size(),
                            [&](std::size_t i) { return x[i] * x[i]; });
}

double dot(std::span<const double> x, std::span<const double> y) {
  assert(x.size() == y.size());
  return blocked_sum_serial(x.size(),
                            [&](std::size_t i) { return x[i] * y[i]; });
}

double max_abs(std::span<const double> x) {
  double m = 0.0;
  for (double v : x) m = std::max(m, std::abs(v));
  return m;
}

void axpby(double a, std::span<const double> x, double b,
           std::span<const double> y, std::span<double> out) {
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a * x[i] + b * y[i];
}

void multiply(std::span<const double> x, std::span<const double> y,
              std::span<double> out) {
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = x[i] * y[i];
}

void divide(std::span<const double> x, std::span<const double> y,
            std::span<double> out) {
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = x[i] / y[i];
}

void multiply_add(std::span<const double> x, std::span<const double> y,
                  std::span<double> out) {
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += x[i] * y[i];
}

}  // namespace serial

namespace parallel {

double sum(std::span<const double> x) {
  return blocked_sum_parallel(x.size(), [&](std::size_t i) { return x[i]; });
}

double sum_squares(std::span<const double> x) {
  return blocked_sum_parallel(x.size(),
                              [&](std::size_t i) { return x[i] * x[i]; });
}

double dot(std::span<const double> x, std::span<const double> y) {
  assert(x.size() == y.size());
  return blocked_sum_parallel(x.size(),
                              [&](std::size_t i) { return x[i] * y[i]; });
}

double max_abs(std::span<const double> x) {
  // max is order independent, so a plain OpenMP reduction is deterministic
  double m = 0.0;
  const auto n = static_cast<std::ptrdiff_t>(x.size());
#pragma omp parallel for reduction(max : m) schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) m = std::max(m, std::abs(x[i]));
  return m;
}

void axpby(double a, std::span<const double> x, double b,
           std::span<const double> y, std::span<double> out) {
  const auto n = static_cast<std::ptrdiff_t>(out.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) out[i] = a * x[i] + b * y[i];
}

void multiply(std::span<const double> x, std::span<const double> y,
              std::span<double> out) {
  const auto n = static_cast<std::ptrdiff_t>(out.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) out[i] = x[i] * y[i];
}

void divide(std::span<const double> x, std::span<const double> y,
            std::span<double> out) {
  const auto n = static_cast<std::ptrdiff_t>(out.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) out[i] = x[i] / y[i];
}

void multiply_add(std::span<const double> x, std::span<const double> y,
                  std::span<double> out) {
  const auto n = static_cast<std::ptrdiff_t>(out.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) out[i] += x[i] * y[i];
}

}  // namespace parallel

void set_num_threads(int n) { omp_set_num_threads(std::max(1, n)); }

int num_threads() { return omp_get_max_threads(); }

}  // namespace mhdlab::kernels
