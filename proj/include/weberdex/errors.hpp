#pragma once

#include <stdexcept>
#include <string>

namespace weberdex {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain (x <= 0, theta outside the wedge, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Gamma function evaluated at (or within eps_int of) a nonpositive integer.
class PoleError : public Error {
 public:
  using Error::Error;
};

/// Series or refinement budget exhausted.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

/// Contour abscissa or parameter outside the validity strip of a formula.
class StripError : public Error {
 public:
  using Error::Error;
};

/// Truncated tail of an integral is not small enough.
class TailError : public Error {
 public:
  using Error::Error;
};

/// Parameter violates a stated hypothesis (alpha range and similar).
class ConstraintError : public Error {
 public:
  using Error::Error;
};

/// Direct kernel route asked for |tau| below tau_min.
class NearZeroTau : public Error {
 public:
  using Error::Error;
};

/// Finite-difference stencil not available at the requested index.
class StencilError : public Error {
 public:
  using Error::Error;
};

/// Sampled data too coarse for a numerical derivative.
class DerivativeError : public Error {
 public:
  using Error::Error;
};

}  // namespace weberdex
