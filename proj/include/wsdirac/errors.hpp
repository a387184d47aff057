#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace wsdirac {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A Gamma argument landed on (or within tolerance of) 0, -1, -2, ...
class PoleError : public Error {
public:
  PoleError(const std::string& what, std::complex<double> argument)
      : Error(what), argument_(argument) {}

  std::complex<double> argument() const noexcept { return argument_; }

private:
  std::complex<double> argument_;
};

class NonConvergence : public Error {
public:
  using Error::Error;
};

/// Connection formula requested with an integer c-a-b (logarithmic case).
class DegenerateParameters : public Error {
public:
  using Error::Error;
};

/// Input outside the domain of an operation (bad config, wrong energy band).
class DomainError : public Error {
public:
  using Error::Error;
};

/// Energy sits on a physical threshold (k = 0 or nu = 0).
class ThresholdError : public Error {
public:
  using Error::Error;
};

class OverflowError : public Error {
public:
  using Error::Error;
};

/// Adaptive integration failed to make progress.
class StiffnessError : public Error {
public:
  using Error::Error;
};

}  // namespace wsdirac
