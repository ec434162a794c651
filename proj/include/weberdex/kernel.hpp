#pragma once

#include <functional>
#include <vector>

#include "weberdex/mbquad.hpp"
#include "weberdex/specfun.hpp"

namespace weberdex {

inline constexpr double kTauMin = 1e-3;

struct Strip {
  double lo;
  double hi;
  bool contains(double c) const { return lo < c && c < hi; }
};

/// The order alpha and the validity constraints that depend on it.
struct KernelOrder {
  double alpha = 0.0;

  KernelOrder() = default;
  explicit KernelOrder(double a);

  Strip mb_strip() const;    // (max(-alpha,0), 1/2)
  Strip re_strip() const;    // (max(-alpha,0), 3/4)
  Strip tail_strip() const;  // (max(-alpha,0), 3/4), abscissa > 0
  bool anger_ok() const;     // |alpha| < 1/2, alpha != 0
  bool ode_ok() const;       // alpha < 1/2
  void require_anger() const;
  void require_ode() const;
};

struct KernelPoint {
  double x = 1.0;
  double tau = 0.0;

  KernelPoint() = default;
  KernelPoint(double x_, double tau_);
};

/// Gamma(s+i tau)Gamma(s-i tau)Gamma(s+alpha)Gamma(1/2-s)Gamma(1-s)/Gamma(1+alpha-s).
MellinSymbol kernel_symbol(const KernelOrder& order, double tau);
/// Gamma(s+i tau)Gamma(s-i tau)Gamma(alpha+s)/(Gamma(s)Gamma(1/2+s)Gamma(1+alpha-s)).
MellinSymbol re_kernel_symbol(const KernelOrder& order, double tau);
/// As re_kernel_symbol with Gamma(s) replaced by Gamma(1+s).
MellinSymbol re_tail_symbol(const KernelOrder& order, double tau);

/// Centre of the strip, which maximizes the pole distance.
ContourLine default_mb_line(const KernelOrder& order);
ContourLine default_re_line(const KernelOrder& order);

double weber_kernel_direct(const KernelOrder& order, const KernelPoint& p);
double weber_kernel_mb(const KernelOrder& order, const KernelPoint& p, const ContourLine& line,
                       const QuadratureConfig& cfg = {});
double weber_kernel_mb(const KernelOrder& order, const KernelPoint& p);
MBResult weber_kernel_mb_ex(const KernelOrder& order, const KernelPoint& p, const ContourLine& line,
                            const QuadratureConfig& cfg = {});
double weber_kernel_anger(const KernelOrder& order, const KernelPoint& p, const QuadratureConfig& cfg = {});

/// Re[J_{alpha+i tau}(sqrt x) Y_{alpha-i tau}(sqrt x)] by direct product.
double weber_re_kernel(const KernelOrder& order, const KernelPoint& p);
/// The same through its (conditionally convergent) Mellin-Barnes integral.
double weber_re_kernel_mb(const KernelOrder& order, const KernelPoint& p, const ContourLine& line);

/// int_x^inf Re[J Y](y) dy/y through the Mellin-Barnes integral of re_tail_symbol.
double re_kernel_tail(const KernelOrder& order, const KernelPoint& p, const ContourLine& line);
/// Same value by quadrature of Re[J Y] over [x, 625] plus the Hankel-series remainder.
double re_kernel_tail_quadrature(const KernelOrder& order, const KernelPoint& p);

/// Left side of the fourth-order ODE assembled from finite differences of the MB route.
struct OdeResidual {
  double residual = 0.0;
  double scale = 0.0;  // largest term magnitude
};
OdeResidual kernel_ode_residual_ex(const KernelOrder& order, const KernelPoint& p, double h);
double kernel_ode_residual(const KernelOrder& order, const KernelPoint& p, double h);

/// Extended-precision MB evaluation of the kernel (trapezoid, long double gamma).
long double weber_kernel_mb_extended(double alpha, double x, double tau);
/// Same at several abscissas from one set of gamma evaluations.
std::vector<long double> weber_kernel_mb_extended(double alpha, double tau, const std::vector<long double>& xs);

/// Constant C_gamma of the bound |W| <= C_gamma x^{-gamma} cosh(pi tau).
double bound_constant(const KernelOrder& order, double gamma, const QuadratureConfig& cfg = {});

/// Fast kernel value for transforms: series for x <= 64, direct product above, MB near tau = 0.
double weber_kernel(const KernelOrder& order, const KernelPoint& p);

}  // namespace weberdex
