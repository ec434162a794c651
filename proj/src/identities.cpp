#include "weberdex/identities.hpp"

#include <cmath>
#include <cstdio>
#include <functional>
#include <string>

#include <boost/math/quadrature/exp_sinh.hpp>

#include "weberdex/errors.hpp"
#include "weberdex/quadrature.hpp"
#include "weberdex/transforms.hpp"

namespace weberdex {

void IdentityReport::finish() {
  abs_err = std::abs(lhs - rhs);
  double scale = std::max(std::abs(lhs), std::abs(rhs));
  rel_err = scale > 0.0 ? abs_err / scale : 0.0;
  passed = abs_err <= abs_tol || rel_err <= rel_tol;
}

IdentityReport make_report(std::string name, ComplexValue lhs, ComplexValue rhs, double rel_tol, double abs_tol) {
  IdentityReport r;
  r.family = name;
  r.name = std::move(name);
  r.lhs = lhs;
  r.rhs = rhs;
  r.rel_tol = rel_tol;
  r.abs_tol = abs_tol;
  r.finish();
  return r;
}

namespace {

const ComplexValue kI(0.0, 1.0);
const double kSqrtPi = std::sqrt(kPi);

std::string fmt(ComplexValue s) {
  char buf[64];
  if (s.imag() == 0.0) std::snprintf(buf, sizeof buf, "%g", s.real());
  else std::snprintf(buf, sizeof buf, "%g%+gi", s.real(), s.imag());
  return buf;
}

IdentityReport named(std::string family, std::string point, ComplexValue lhs, ComplexValue rhs, double rel_tol,
                     double abs_tol = 0.0) {
  IdentityReport r = make_report(family + " " + point, lhs, rhs, rel_tol, abs_tol);
  r.family = std::move(family);
  return r;
}

// Complex integral of f over equal Gauss panels of [a, b].
ComplexValue cgauss(const std::function<ComplexValue(double)>& f, double a, double b, int panels) {
  double re = gauss_panels([&](double t) { return f(t).real(); }, a, b, panels);
  double im = gauss_panels([&](double t) { return f(t).imag(); }, a, b, panels);
  return {re, im};
}

ComplexValue cfinite(const std::function<ComplexValue(double)>& f, double a, double b) {
  double re = integrate_finite([&](double t) { return f(t).real(); }, a, b, 1e-13);
  double im = integrate_finite([&](double t) { return f(t).imag(); }, a, b, 1e-13);
  return {re, im};
}

// log cosh(y/2) without overflow
double log_cosh_half(double y) { return 0.5 * y - std::log(2.0) + std::log1p(std::exp(-y)); }
// log sinh(t/2) without overflow
double log_sinh_half(double t) { return 0.5 * t - std::log(2.0) + std::log(-std::expm1(-t)); }

ComplexValue gamma_pair(ComplexValue s, double tau) {
  return std::exp(log_gamma(s + kI * tau) + log_gamma(s - kI * tau));
}

void require_strip(double c, double lo, double hi, const char* what) {
  if (!(c > lo && c < hi)) {
    throw StripError(std::string(what) + ": Re s = " + std::to_string(c) + " outside (" + std::to_string(lo) + ", " +
                     std::to_string(hi) + ")");
  }
}

// int_0^inf of hyp^2(pi tau)|Gamma(s+i tau)Gamma(s-i tau)|^2, hyp = sinh or cosh.
// The integrand tends to pi^2 (tau^2)^{2c-1}; beyond tau = 1e5 only that leading term is kept.
double hyperbolic_gamma_half(ComplexValue s, bool use_cosh) {
  const double c = s.real();
  auto f = [&](double tau) {
    double lg = 2.0 * (log_gamma(s + kI * tau) + log_gamma(s - kI * tau)).real();
    double lh;
    if (use_cosh) lh = kPi * tau + std::log1p(std::exp(-2.0 * kPi * tau)) - std::log(2.0);
    else lh = tau == 0.0 ? -HUGE_VAL : kPi * tau + std::log(-std::expm1(-2.0 * kPi * tau)) - std::log(2.0);
    return std::exp(lg + 2.0 * lh);
  };
  const double T = 1e5;
  double head = gauss_panels(f, 0.0, 1.0, 8);
  double body = gauss_panels(
      [&](double u) {
        double tau = std::exp(u);
        return f(tau) * tau;
      },
      0.0, std::log(T), 48);
  double tail = kPi * kPi * std::pow(T, 4.0 * c - 1.0) / (1.0 - 4.0 * c);
  return head + body + tail;
}

}  // namespace

IdentityReport check_gamma_cosine_pair(ComplexValue s, double y, const QuadratureConfig& cfg) {
  cfg.validate();
  require_strip(s.real(), 0.0, HUGE_VAL, "gamma-cosine");
  double T = std::max(20.0, 45.0 / std::max(s.real(), 0.05));
  T = std::min(T, 200.0);
  ComplexValue lhs = cgauss([&](double tau) { return gamma_pair(s, tau) * std::cos(tau * y); }, 0.0, T,
                            static_cast<int>(std::ceil(T / 0.5)));
  ComplexValue rhs = kPi * std::exp(-2.0 * s * std::log(2.0) + log_gamma(2.0 * s) - 2.0 * s * log_cosh_half(y));
  return named("gamma-cosine", "s=" + fmt(s) + " y=" + fmt(y), lhs, rhs, 1e-8, 1e-14);
}

IdentityReport check_gamma_cosine_reciprocal(ComplexValue s, double tau, const QuadratureConfig& cfg) {
  cfg.validate();
  require_strip(s.real(), 0.0, HUGE_VAL, "gamma-cosine-reciprocal");
  double Y = std::min(400.0, 42.0 / s.real());
  ComplexValue integral = cgauss([&](double y) { return std::cos(tau * y) * std::exp(-2.0 * s * log_cosh_half(y)); },
                                 0.0, Y, static_cast<int>(std::ceil(Y / 0.5)));
  ComplexValue rhs = std::exp(log_gamma(2.0 * s) - (2.0 * s - 1.0) * std::log(2.0)) * integral;
  ComplexValue lhs = gamma_pair(s, tau);
  return named("gamma-cosine-reciprocal", "s=" + fmt(s) + " tau=" + fmt(tau), lhs, rhs, 1e-8, 1e-14);
}

IdentityReport check_sinh_gamma_integral(ComplexValue s, const QuadratureConfig& cfg) {
  cfg.validate();
  require_strip(s.real(), 0.0, 0.25, "sinh-gamma");
  const double c = s.real();
  double lhs = hyperbolic_gamma_half(s, false);
  ComplexValue lg = log_gamma(0.5 - 2.0 * c) + log_gamma(2.0 * c) +
                    2.0 * (log_gamma(0.5 + s) - log_gamma(1.0 - s)).real();
  double rhs = kPi * kSqrtPi / 2.0 * std::exp(lg.real());
  IdentityReport r = named("sinh-gamma", "s=" + fmt(s), lhs, rhs, 1e-7);
  return r;
}

double cosh_gamma_lhs(ComplexValue s, bool full_line) {
  require_strip(s.real(), 0.0, 0.25, "cosh-gamma");
  if (!full_line) return 2.0 * hyperbolic_gamma_half(s, true);
  // the same integrand summed over both half lines separately
  auto f = [&](double tau) {
    double lg = 2.0 * (log_gamma(s + kI * tau) + log_gamma(s - kI * tau)).real();
    double lh = std::abs(kPi * tau) + std::log1p(std::exp(-2.0 * kPi * std::abs(tau))) - std::log(2.0);
    return std::exp(lg + 2.0 * lh);
  };
  const double c = s.real();
  const double T = 1e5;
  double sum = gauss_panels(f, -1.0, 1.0, 16);
  for (int side : {-1, 1}) {
    sum += gauss_panels(
        [&](double u) {
          double tau = std::exp(u);
          return f(side * tau) * tau;
        },
        0.0, std::log(T), 48);
  }
  return sum + 2.0 * kPi * kPi * std::pow(T, 4.0 * c - 1.0) / (1.0 - 4.0 * c);
}

IdentityReport check_cosh_gamma_integral(ComplexValue s, const QuadratureConfig& cfg) {
  cfg.validate();
  require_strip(s.real(), 0.0, 0.25, "cosh-gamma");
  const double c = s.real();
  double lhs = cosh_gamma_lhs(s, false);
  ComplexValue lg = log_gamma(0.5 - 2.0 * c) + log_gamma(2.0 * c) + 2.0 * (log_gamma(s) - log_gamma(0.5 - s)).real();
  double rhs = kPi * kSqrtPi * std::exp(lg.real());
  return named("cosh-gamma", "s=" + fmt(s), lhs, rhs, 1e-7);
}

IdentityReport check_sine_gamma_pair(ComplexValue s, double tau, const QuadratureConfig& cfg) {
  cfg.validate();
  require_strip(s.real(), 0.0, 0.5, "sine-gamma");
  auto f = [&](double t) {
    if (!(t > 0.0)) return ComplexValue(0.0);
    return std::sin(t * tau) * std::exp(-2.0 * s * log_sinh_half(t));
  };
  double T = std::min(400.0, 42.0 / s.real());
  ComplexValue lhs = cfinite(f, 0.0, 1.0) + cgauss(f, 1.0, T, static_cast<int>(std::ceil((T - 1.0) / 0.5)));
  ComplexValue rhs = std::sinh(kPi * tau) / kSqrtPi *
                     std::exp(log_gamma(s + kI * tau) + log_gamma(s - kI * tau) + log_gamma(1.0 - s) -
                              log_gamma(0.5 + s));
  return named("sine-gamma", "s=" + fmt(s) + " tau=" + fmt(tau), lhs, rhs, 1e-7, 1e-14);
}

ComplexValue sine_gamma_reciprocal_lhs(ComplexValue s, double t) {
  if (t == 0.0) return 0.0;
  const double sg = t < 0.0 ? -1.0 : 1.0;
  const double at = std::abs(t);
  auto f = [&](double tau) {
    if (tau == 0.0) return ComplexValue(0.0);
    double lsh = kPi * tau + std::log(-std::expm1(-2.0 * kPi * tau)) - std::log(2.0);
    return std::exp(lsh + log_gamma(s + kI * tau) + log_gamma(s - kI * tau)) * std::sin(at * tau);
  };
  const double half = kPi / at;
  const double a = half * std::ceil(4.0 / half);
  // Gamma(s +- i tau) has poles at distance Re s from the axis; let the adaptive rule resolve them
  ComplexValue head = cfinite(f, 0.0, a);
  double re = oscillatory_tail([&](double x) { return f(x).real(); }, a, half, 1e-12, 2000);
  double im = s.imag() == 0.0 ? 0.0 : oscillatory_tail([&](double x) { return f(x).imag(); }, a, half, 1e-12, 2000);
  return sg * (head + ComplexValue(re, im));
}

IdentityReport check_sine_gamma_reciprocal(ComplexValue s, double t, const QuadratureConfig& cfg) {
  cfg.validate();
  require_strip(s.real(), 0.0, 0.25, "sine-gamma-reciprocal");
  if (!(t > 0.0)) throw DomainError("sine-gamma-reciprocal: t must be positive");
  ComplexValue lhs = sine_gamma_reciprocal_lhs(s, t);
  ComplexValue rhs =
      kPi * kSqrtPi / 2.0 * std::exp(log_gamma(0.5 + s) - log_gamma(1.0 - s) - 2.0 * s * log_sinh_half(t));
  return named("sine-gamma-reciprocal", "s=" + fmt(s) + " t=" + fmt(t), lhs, rhs, 1e-6, 1e-13);
}

IdentityReport check_nicholson_kl(double tau, double x, const QuadratureConfig& cfg) {
  cfg.validate();
  if (!(x > 0.0)) throw DomainError("nicholson-kl: x must be positive");
  double lhs = std::sinh(kPi * tau) / kPi * std::exp(-x / 2) * macdonald_k(tau, x / 2);
  RealFn g = [&](double t) {
    if (!(t > 0.0)) return 0.0;
    double w = std::exp(-t / x);
    if (w == 0.0) return 0.0;
    return w * im_j_squared(tau, t);
  };
  static thread_local boost::math::quadrature::exp_sinh<double> es;
  double err = 0.0;
  double head = integrate_finite(g, 0.0, 1.0, 1e-13);
  double tail = es.integrate([&](double u) { return g(1.0 + u); }, 1e-13, &err);
  double rhs = (head + tail) / x;
  IdentityReport r = named("nicholson-kl", "tau=" + fmt(tau) + " x=" + fmt(x), lhs, rhs, 1e-6, 1e-14);
  IdentityReport flipped = make_report("", lhs, -rhs, 1e-6, 1e-14);
  char buf[160];
  std::snprintf(buf, sizeof buf, "right side with Im[J^2_{-i tau}]: rel_err %.3e (%s)", flipped.rel_err,
                flipped.passed ? "holds" : "fails");
  r.note = buf;
  return r;
}

MellinSymbol macdonald_symbol(double tau, MacdonaldForm form) {
  MellinSymbol m;
  if (form == MacdonaldForm::Cosh) {
    m.evaluate = [tau](ComplexValue s) {
      return std::exp(log_gamma(s + kI * tau) + log_gamma(s - kI * tau) + log_gamma(0.5 - s));
    };
    m.strip_lo = 0.0;
    m.strip_hi = 0.5;
    m.name = "Macdonald symbol (cosh form)";
  } else {
    m.evaluate = [tau](ComplexValue s) {
      return std::exp(log_gamma(s + kI * tau) + log_gamma(s - kI * tau) - log_gamma(0.5 + s));
    };
    m.strip_lo = 0.0;
    m.name = "Macdonald symbol (exp form)";
  }
  return m;
}

IdentityReport check_kl_macdonald_mb(double tau, double x, const ContourLine& line, MacdonaldForm form) {
  if (!(x > 0.0)) throw DomainError("macdonald-mb: x must be positive");
  MellinSymbol m = macdonald_symbol(tau, form);
  if (!m.contains(line.abscissa)) {
    throw StripError("macdonald-mb: abscissa " + std::to_string(line.abscissa) + " outside the strip");
  }
  double k = macdonald_k(tau, x / 2);
  double lhs;
  std::string fam;
  if (form == MacdonaldForm::Cosh) {
    lhs = kSqrtPi / std::cosh(kPi * tau) * std::exp(x / 2) * k;
    fam = "macdonald-mb-cosh";
  } else {
    lhs = std::exp(-x / 2) * k / kSqrtPi;
    fam = "macdonald-mb-exp";
  }
  ComplexValue rhs = mb_integral(m, line, x);
  IdentityReport r = named(fam, "tau=" + fmt(tau) + " x=" + fmt(x) + " c=" + fmt(line.abscissa), lhs, rhs, 1e-8, 1e-15);
  return r;
}

std::vector<std::string> identity_families() {
  return {"gamma-cosine", "gamma-cosine-reciprocal", "sine-gamma",       "sine-gamma-reciprocal", "sinh-gamma",
          "cosh-gamma",   "nicholson-kl",            "macdonald-mb-cosh", "macdonald-mb-exp"};
}

std::vector<IdentityReport> run_identity_suite(const std::string& only) {
  using Job = std::function<IdentityReport()>;
  std::vector<std::pair<std::string, Job>> jobs;
  auto add = [&](const std::string& fam, Job j) { jobs.emplace_back(fam, std::move(j)); };
  const ComplexValue i(0.0, 1.0);

  for (auto [s, y] : {std::pair<ComplexValue, double>{1.0, 0.0}, {0.75, 1.0}, {0.3 + 0.4 * i, 2.0}}) {
    add("gamma-cosine", [s, y] { return check_gamma_cosine_pair(s, y); });
  }
  for (auto [s, t] : {std::pair<ComplexValue, double>{1.0, 0.5}, {0.75, 1.0}, {0.4 + 0.2 * i, 0.7}}) {
    add("gamma-cosine-reciprocal", [s, t] { return check_gamma_cosine_reciprocal(s, t); });
  }
  for (auto [s, t] : {std::pair<ComplexValue, double>{0.2, 1.0}, {0.35, 0.5}, {0.1 + 0.2 * i, 1.5}}) {
    add("sine-gamma", [s, t] { return check_sine_gamma_pair(s, t); });
  }
  for (auto [s, t] : {std::pair<ComplexValue, double>{0.15, 1.0}, {0.2, 0.5}, {0.1 + 0.1 * i, 2.0}}) {
    add("sine-gamma-reciprocal", [s, t] { return check_sine_gamma_reciprocal(s, t); });
  }
  for (ComplexValue s : {ComplexValue(0.125), 0.1 + 0.2 * i, ComplexValue(0.2)}) {
    add("sinh-gamma", [s] { return check_sinh_gamma_integral(s); });
  }
  for (ComplexValue s : {ComplexValue(0.125), 0.05 + 0.1 * i, ComplexValue(0.2)}) {
    add("cosh-gamma", [s] { return check_cosh_gamma_integral(s); });
  }
  for (auto [tau, x] : {std::pair<double, double>{1.0, 2.0}, {0.5, 1.0}, {0.8, 3.0}}) {
    add("nicholson-kl", [tau, x] { return check_nicholson_kl(tau, x); });
  }
  for (auto [tau, x, c] : {std::tuple<double, double, double>{0.5, 1.0, 0.3}, {1.0, 2.0, 0.25}, {2.0, 0.5, 0.1}}) {
    add("macdonald-mb-cosh", [tau, x, c] { return check_kl_macdonald_mb(tau, x, ContourLine(c), MacdonaldForm::Cosh); });
  }
  for (auto [tau, x, c] : {std::tuple<double, double, double>{1.0, 2.0, 0.5}, {0.5, 1.0, 1.0}, {2.0, 3.0, 0.25}}) {
    add("macdonald-mb-exp", [tau, x, c] { return check_kl_macdonald_mb(tau, x, ContourLine(c), MacdonaldForm::Exp); });
  }

  std::vector<Job> selected;
  for (auto& [fam, job] : jobs) {
    if (only.empty() || fam == only || fam.rfind(only + "-", 0) == 0) selected.push_back(job);
  }
  std::vector<IdentityReport> out(selected.size());
  parallel_for(selected.size(), [&](std::size_t k) { out[k] = selected[k](); });
  return out;
}

}  // namespace weberdex
