#pragma once

// Data-parallel inner loops. Every kernel exists twice: an OpenMP version used
// by the library and a serial reference used by tests and the benchmark.
//
// Reductions are evaluated over fixed blocks of kReductionBlock elements and
// the block partials are summed in order, so the parallel result is bitwise
// identical to the serial one for any thread count.

#include <cstddef>
#include <span>

namespace mhdlab::kernels {

inline constexpr std::size_t kReductionBlock = 4096;

namespace serial {

double sum(std::span<const double> x);
double sum_squares(std::span<const double> x);
double dot(std::span<const double> x, std::span<const double> y);
double max_abs(std::span<const double> x);

// out = a*x + b*y
void axpby(double a, std::span<const double> x, double b,
           std::span<const double> y, std::span<double> out);
void multiply(std::span<const double> x, std::span<const double> y,
              std::span<double> out);
void divide(std::span<const double> x, std::span<const double> y,
            std::span<double> out);
// out += x*y
void multiply_add(std::span<const double> x, std::span<const double> y,
                  std::span<double> out);

}  // namespace serial

namespace parallel {

double sum(std::span<const double> x);
double sum_squares(std::span<const double> x);
double dot(std::span<const double> x, std::span<const double> y);
double max_abs(std::span<const double> x);

void axpby(double a, std::span<const double> x, double b,
           std::span<const double> y, std::span<double> out);
void multiply(std::span<const double> x, std::span<const double> y,
              std::span<double> out);
void divide(std::span<const double> x, std::span<const double> y,
            std::span<double> out);
void multiply_add(std::span<const double> x, std::span<const double> y,
                  std::span<double> out);

}  // namespace parallel

/// Sets the OpenMP team size used by the parallel kernels (n >= 1).
void set_num_threads(int n);
int num_threads();

}  // namespace mhdlab::kernels
