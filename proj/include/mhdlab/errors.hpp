#pragma once

#include <stdexcept>
#include <string>

namespace mhdlab {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid run configuration or parameter set; rejected before computing.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Caller broke an operation's contract (mismatched grids, times, shapes).
class UsageError : public Error {
 public:
  using Error::Error;
};

/// Malformed snapshot or CSV input.
class FormatError : public Error {
 public:
  using Error::Error;
};

class InsufficientDataError : public Error {
 public:
  using Error::Error;
};

/// Base of every error that aborts a running simulation.
class NumericalAbort : public Error {
 public:
  using Error::Error;
};

class VacuumError : public NumericalAbort {
 public:
  using NumericalAbort::NumericalAbort;
};

class StepSizeError : public NumericalAbort {
 public:
  using NumericalAbort::NumericalAbort;
};

/// The reference solution left the regime where it is trusted to be smooth.
class RegularityError : public NumericalAbort {
 public:
  using NumericalAbort::NumericalAbort;
};

}  // namespace mhdlab
