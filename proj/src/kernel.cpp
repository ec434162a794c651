#include "weberdex/kernel.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include <boost/math/quadrature/gauss.hpp>

#include "weberdex/errors.hpp"
#include "weberdex/kernel_series.hpp"
#include "weberdex/quadrature.hpp"

namespace weberdex {

namespace {

const ComplexValue kI(0.0, 1.0);

void check_point(const KernelPoint& p) {
  if (!(p.x > 0.0) || !std::isfinite(p.x)) throw DomainError("kernel: x must be positive");
  if (!std::isfinite(p.tau)) throw DomainError("kernel: tau must be finite");
}

void check_line(const Strip& s, const ContourLine& line, const char* what) {
  if (!s.contains(line.abscissa)) {
    throw StripError(std::string(what) + ": abscissa " + std::to_string(line.abscissa) + " outside (" +
                     std::to_string(s.lo) + ", " + std::to_string(s.hi) + ")");
  }
}

}  // namespace

KernelOrder::KernelOrder(double a) : alpha(a) {
  if (!std::isfinite(a)) throw DomainError("KernelOrder: alpha must be finite");
}

Strip KernelOrder::mb_strip() const { return {std::max(-alpha, 0.0), 0.5}; }
Strip KernelOrder::re_strip() const { return {std::max(-alpha, 0.0), 0.75}; }
Strip KernelOrder::tail_strip() const { return {std::max(-alpha, 0.0), 0.75}; }
bool KernelOrder::anger_ok() const { return std::abs(alpha) < 0.5 && alpha != 0.0; }
bool KernelOrder::ode_ok() const { return alpha < 0.5; }

void KernelOrder::require_anger() const {
  if (!anger_ok()) {
    throw ConstraintError("anger route requires |alpha| < 1/2 and alpha != 0 (got alpha = " +
                          std::to_string(alpha) + ")");
  }
}

void KernelOrder::require_ode() const {
  if (!ode_ok()) throw ConstraintError("ODE residual requires alpha < 1/2 (got alpha = " + std::to_string(alpha) + ")");
}

KernelPoint::KernelPoint(double x_, double tau_) : x(x_), tau(tau_) {
  if (!(x_ > 0.0)) throw DomainError("KernelPoint: x must be positive");
}

MellinSymbol kernel_symbol(const KernelOrder& order, double tau) {
  const double a = order.alpha;
  MellinSymbol m;
  m.evaluate = [a, tau](ComplexValue s) {
    ComplexValue l = log_gamma(s + kI * tau) + log_gamma(s - kI * tau) + log_gamma(s + a) +
                     log_gamma(0.5 - s) + log_gamma(1.0 - s) - log_gamma(1.0 + a - s);
    return std::exp(l);
  };
  Strip st = order.mb_strip();
  m.strip_lo = st.lo;
  m.strip_hi = st.hi;
  m.name = "kernel symbol";
  return m;
}

MellinSymbol re_kernel_symbol(const KernelOrder& order, double tau) {
  const double a = order.alpha;
  MellinSymbol m;
  m.evaluate = [a, tau](ComplexValue s) {
    ComplexValue l = log_gamma(s + kI * tau) + log_gamma(s - kI * tau) + log_gamma(a + s) - log_gamma(s) -
                     log_gamma(0.5 + s) - log_gamma(1.0 + a - s);
    return std::exp(l);
  };
  Strip st = order.re_strip();
  m.strip_lo = st.lo;
  m.strip_hi = st.hi;
  m.name = "Re-kernel symbol";
  return m;
}

MellinSymbol re_tail_symbol(const KernelOrder& order, double tau) {
  const double a = order.alpha;
  MellinSymbol m;
  m.evaluate = [a, tau](ComplexValue s) {
    ComplexValue l = log_gamma(s + kI * tau) + log_gamma(s - kI * tau) + log_gamma(a + s) - log_gamma(1.0 + s) -
                     log_gamma(0.5 + s) - log_gamma(1.0 + a - s);
    return std::exp(l);
  };
  Strip st = order.tail_strip();
  m.strip_lo = st.lo;
  m.strip_hi = st.hi;
  m.name = "Re-kernel tail symbol";
  return m;
}

ContourLine default_mb_line(const KernelOrder& order) {
  Strip s = order.mb_strip();
  return ContourLine(0.5 * (s.lo + s.hi), 40.0, 0.25);
}

ContourLine default_re_line(const KernelOrder& order) {
  Strip s = order.re_strip();
  // the algebraic decay rate |t|^{2c-2} favours a small abscissa, pole distance a larger one
  double c = std::min(s.lo + 0.5 * (s.hi - s.lo), s.lo + 0.2);
  return ContourLine(c, 400.0, 0.05);
}

double weber_kernel_direct(const KernelOrder& order, const KernelPoint& p) {
  check_point(p);
  if (std::abs(p.tau) < kTauMin) {
    throw NearZeroTau("direct route: |tau| below tau_min = 1e-3; use the MB route");
  }
  double z = std::sqrt(p.x);
  ComplexValue nu(order.alpha, p.tau);
  ComplexValue jy = bessel_j(nu, z) * bessel_y(std::conj(nu), z);
  return jy.imag() / std::sinh(kPi * p.tau);
}

MBResult weber_kernel_mb_ex(const KernelOrder& order, const KernelPoint& p, const ContourLine& line,
                            const QuadratureConfig& cfg) {
  check_point(p);
  check_line(order.mb_strip(), line, "weber_kernel_mb");
  MBResult r = mb_integral_ex(kernel_symbol(order, p.tau), line, p.x, cfg);
  double pre = std::cosh(kPi * p.tau) / std::pow(kPi, 2.5);
  r.value *= pre;
  r.error_estimate *= pre;
  return r;
}

double weber_kernel_mb(const KernelOrder& order, const KernelPoint& p, const ContourLine& line,
                       const QuadratureConfig& cfg) {
  return weber_kernel_mb_ex(order, p, line, cfg).value.real();
}

double weber_kernel_mb(const KernelOrder& order, const KernelPoint& p) {
  return weber_kernel_mb(order, p, default_mb_line(order));
}

double weber_kernel_anger(const KernelOrder& order, const KernelPoint& p, const QuadratureConfig& /*cfg*/) {
  check_point(p);
  order.require_anger();
  const double tau = std::abs(p.tau);
  const double sx = std::sqrt(p.x);
  const double nu = 2.0 * order.alpha;
  // Anger minus Bessel = sin(2 alpha pi) * schlafli_tail; the sine cancels the prefactor.
  auto f = [&](double u) { return schlafli_tail(nu, 2.0 * sx * std::cosh(0.5 * u)) * std::cos(tau * u); };
  const double u_end = 40.0;
  double width = std::min(0.5, 1.0 / std::max(tau, 1e-9));
  int panels = static_cast<int>(std::ceil(u_end / width));
  double body = gauss_panels(f, 0.0, u_end, panels);
  // leading decay 1/(pi z(u)) ~ e^{-u/2}/(pi sqrt x) beyond u_end
  ComplexValue w(-0.5, tau);
  double tail = (std::exp(w * u_end) / (-w)).real() / (kPi * sx);
  return 2.0 * std::cosh(kPi * tau) / kPi * (body + tail);
}

double weber_re_kernel(const KernelOrder& order, const KernelPoint& p) {
  check_point(p);
  double z = std::sqrt(p.x);
  ComplexValue nu(order.alpha, p.tau);
  if (z > kXSwitch) {
    HankelProduct hp;
    if (hankel_product(order.alpha, p.tau, z, hp)) return hp.re;
  }
  return (bessel_j(nu, z) * bessel_y(std::conj(nu), z)).real();
}

double weber_re_kernel_mb(const KernelOrder& order, const KernelPoint& p, const ContourLine& line) {
  check_point(p);
  check_line(order.re_strip(), line, "weber_re_kernel_mb");
  QuadratureConfig cfg;
  cfg.rel_tol = 1e-11;
  ComplexValue v = mb_integral_algebraic(re_kernel_symbol(order, p.tau), line, p.x, cfg).value;
  return -v.real() / std::sqrt(kPi);
}

double re_kernel_tail(const KernelOrder& order, const KernelPoint& p, const ContourLine& line) {
  check_point(p);
  check_line(order.tail_strip(), line, "re_kernel_tail");
  if (!(line.abscissa > 0.0)) throw StripError("re_kernel_tail: abscissa must be positive");
  QuadratureConfig cfg;
  cfg.rel_tol = 1e-11;
  ComplexValue v = mb_integral_algebraic(re_tail_symbol(order, p.tau), line, p.x, cfg).value;
  return -v.real() / std::sqrt(kPi);
}

double re_kernel_tail_quadrature(const KernelOrder& order, const KernelPoint& p) {
  check_point(p);
  // 2 int_{sqrt x}^{25} Re[JY](z) dz/z by Gauss panels, then the Hankel remainder
  const double zc = 25.0;
  double z0 = std::sqrt(p.x);
  if (z0 >= zc) return re_tail_hankel(order.alpha, p.tau, z0);
  int panels = std::max(1, static_cast<int>(std::ceil((zc - z0) / (kPi / 8))));
  auto f = [&](double z) { return 2.0 * weber_re_kernel(order, KernelPoint(z * z, p.tau)) / z; };
  return gauss_panels(f, z0, zc, panels) + re_tail_hankel(order.alpha, p.tau, zc);
}

std::vector<long double> weber_kernel_mb_extended(double alpha, double tau, const std::vector<long double>& xs) {
  KernelOrder order(alpha);
  Strip st = order.mb_strip();
  const long double pi = 3.141592653589793238462643383279502884L;
  const long double c = 0.5L * (st.lo + st.hi);
  const long double dist = std::min<long double>(c - st.lo, st.hi - c);
  const long double h = 2.0L * pi * dist / 50.0L;
  const long double t_end = std::abs(tau) + 10.0L;
  const long n = static_cast<long>(std::ceil(t_end / h));
  const ComplexLD I(0.0L, 1.0L);
  const long double a = alpha;
  const long double t = tau;
  // gamma factors are shared by every abscissa, so their rounding is common to all xs
  std::vector<long double> lx(xs.size());
  for (std::size_t k = 0; k < xs.size(); ++k) lx[k] = std::log(xs[k]);
  std::vector<long double> sum(xs.size(), 0.0L);
  std::vector<long double> comp(xs.size(), 0.0L);
  for (long j = -n; j <= n; ++j) {
    ComplexLD s(c, j * h);
    ComplexLD l = log_gamma_ld(s + I * t) + log_gamma_ld(s - I * t) + log_gamma_ld(s + a) +
                  log_gamma_ld(0.5L - s) + log_gamma_ld(1.0L - s) - log_gamma_ld(1.0L + a - s);
    ComplexLD f = std::exp(l);
    for (std::size_t k = 0; k < xs.size(); ++k) {
      long double v = (f * std::exp(-s * lx[k])).real() - comp[k];
      long double nx = sum[k] + v;
      comp[k] = (nx - sum[k]) - v;
      sum[k] = nx;
    }
  }
  const long double pre = std::cosh(pi * t) / std::pow(pi, 2.5L) * h / (2.0L * pi);
  for (auto& v : sum) v *= pre;
  return sum;
}

long double weber_kernel_mb_extended(double alpha, double x, double tau) {
  return weber_kernel_mb_extended(alpha, tau, std::vector<long double>{x})[0];
}

OdeResidual kernel_ode_residual_ex(const KernelOrder& order, const KernelPoint& p, double h) {
  check_point(p);
  order.require_ode();
  if (!(h > 0.0) || !(p.x > 2.0 * h)) throw DomainError("kernel_ode_residual: need h > 0 and x > 2h");
  const double a = order.alpha;
  const double t = p.tau;
  const double x = p.x;
  // stencil abscissas in extended precision; double rounding of x +- k h is amplified by 1/h^4
  const long double hl = h;
  const long double xl = x;
  std::vector<long double> f = weber_kernel_mb_extended(a, t, {xl - 2 * hl, xl - hl, xl, xl + hl, xl + 2 * hl});
  long double d1 = (-f[4] + 8 * f[3] - 8 * f[1] + f[0]) / (12 * hl);
  long double d2 = (-f[4] + 16 * f[3] - 30 * f[2] + 16 * f[1] - f[0]) / (12 * hl * hl);
  long double d3 = (f[4] - 2 * f[3] + 2 * f[1] - f[0]) / (2 * hl * hl * hl);
  long double d4 = (f[4] - 4 * f[3] + 6 * f[2] - 4 * f[1] + f[0]) / (hl * hl * hl * hl);
  long double terms[5] = {
      (long double)x * x * x * d4,
      6.0L * x * x * d3,
      (long double)x * (7.0L + t * t - a * a + x) * d2,
      (1.0L + t * t - a * a + 2.5L * x) * d1,
      (0.5L - (long double)(a * t) * (a * t) / x) * f[2],
  };
  OdeResidual r;
  long double sum = 0.0L;
  long double scale = 0.0L;
  for (long double term : terms) {
    sum += term;
    scale = std::max(scale, std::abs(term));
  }
  r.residual = static_cast<double>(sum);
  r.scale = static_cast<double>(scale);
  return r;
}

double kernel_ode_residual(const KernelOrder& order, const KernelPoint& p, double h) {
  return kernel_ode_residual_ex(order, p, h).residual;
}

double bound_constant(const KernelOrder& order, double gamma, const QuadratureConfig& /*cfg*/) {
  if (!(gamma > std::max(-order.alpha, 0.0)) || !(gamma < 0.5)) {
    throw StripError("bound_constant: gamma must lie in (max(-alpha,0), 1/2)");
  }
  const double a = order.alpha;
  auto f = [&](double t) {
    ComplexValue s(gamma, t);
    ComplexValue l = log_gamma(s + a) - log_sin_pi(2.0 * s) - log_gamma(1.0 + a - s);
    return std::exp(l.real());
  };
  // |integrand| is even in t
  double integral = 2.0 * gauss_panels(f, 0.0, 24.0, 96);
  double beta = std::exp(2.0 * std::lgamma(gamma) - std::lgamma(2.0 * gamma));
  return std::pow(2.0, 2.0 * gamma - 1.0) / (kPi * kPi) * beta * integral;
}

double weber_kernel(const KernelOrder& order, const KernelPoint& p) {
  check_point(p);
  double t = std::abs(p.tau);
  if (t < kTauMin) return weber_kernel_mb(order, KernelPoint(p.x, t));
  return kernel_w_any(order.alpha, t, p.x);
}

}  // namespace weberdex
