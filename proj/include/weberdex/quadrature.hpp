#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "weberdex/specfun.hpp"

namespace weberdex {

using RealFn = std::function<double(double)>;

/// Composite 20-point Gauss-Legendre over equal panels of [a, b].
double gauss_panels(const RealFn& f, double a, double b, int panels);

/// int_0^1 by tanh-sinh plus int_1^inf by exp-sinh.
double integrate_half_line(const RealFn& f, double tol = 1e-12);

/// tanh-sinh on a finite interval (endpoint singularities allowed).
double integrate_finite(const RealFn& f, double a, double b, double tol = 1e-12);

/// Wynn epsilon extrapolation of a sequence of partial sums.
double wynn_epsilon(const std::vector<double>& partial_sums);

/// int_a^inf f for an oscillatory f with (approximate) half period `half_period`:
/// Gauss panels over half periods, partial sums accelerated by Wynn epsilon.
/// Stops once the extrapolated value is stable to `tol` (absolute).
double oscillatory_tail(const RealFn& f, double a, double half_period, double tol, int max_panels = 400);

/// Worker count from WEBERDEX_THREADS (default: hardware concurrency, at least 1).
unsigned thread_count();

/// Runs body(i) for i in [0, n) on up to thread_count() threads.
/// Each index must write only its own output slot; results are then order independent.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace weberdex
