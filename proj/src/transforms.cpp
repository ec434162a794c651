#include "weberdex/transforms.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/gauss.hpp>

#include "weberdex/errors.hpp"

namespace weberdex {

namespace {

const ComplexValue kI(0.0, 1.0);
constexpr double kQuadTol = 1e-12;
// beyond this point integrands of the half-line forms are below rounding
constexpr double kFarX = 1e12;

double cubic_local(const std::vector<double>& xs, const std::vector<double>& ys, double x) {
  const std::size_t n = xs.size();
  if (n == 1) return ys[0];
  std::size_t i = std::upper_bound(xs.begin(), xs.end(), x) - xs.begin();
  if (i == 0) i = 1;
  if (i >= n) i = n - 1;
  if (n < 4) {
    double t = (x - xs[i - 1]) / (xs[i] - xs[i - 1]);
    return ys[i - 1] + t * (ys[i] - ys[i - 1]);
  }
  std::size_t lo = (i >= 2) ? i - 2 : 0;
  if (lo + 4 > n) lo = n - 4;
  double sum = 0.0;
  for (std::size_t a = lo; a < lo + 4; ++a) {
    double w = 1.0;
    for (std::size_t b = lo; b < lo + 4; ++b) {
      if (b != a) w *= (x - xs[b]) / (xs[a] - xs[b]);
    }
    sum += w * ys[a];
  }
  return sum;
}

void check_strip(const Strip& s, double c, const char* what) {
  if (!s.contains(c)) {
    throw StripError(std::string(what) + ": abscissa " + std::to_string(c) + " outside (" + std::to_string(s.lo) +
                     ", " + std::to_string(s.hi) + ")");
  }
}

void check_tau_table(const TransformTable& t) {
  t.validate();
  if (t.grid.front() < 0.0) throw DomainError("tau table must start at tau >= 0");
}

double exp_sinh_tail(const RealFn& f, double a) {
  static thread_local boost::math::quadrature::exp_sinh<double> es;
  double err = 0.0;
  return es.integrate([&](double t) { return f(a + t); }, kQuadTol, &err);
}

// Gauss-Legendre nodes and weights over equal panels of [a, b].
void gauss_nodes(double a, double b, int panels, std::vector<double>& x, std::vector<double>& w) {
  using G = boost::math::quadrature::gauss<double, 20>;
  const auto& ab = G::abscissa();
  const auto& wt = G::weights();
  double h = (b - a) / panels;
  for (int p = 0; p < panels; ++p) {
    double mid = a + (p + 0.5) * h;
    double half = 0.5 * h;
    for (std::size_t i = 0; i < ab.size(); ++i) {
      if (ab[i] == 0.0) {
        x.push_back(mid);
        w.push_back(half * wt[i]);
        continue;
      }
      x.push_back(mid - half * ab[i]);
      w.push_back(half * wt[i]);
      x.push_back(mid + half * ab[i]);
      w.push_back(half * wt[i]);
    }
  }
}

// Smallest multiple of 0.5 beyond which |m(tau)| stays below 1e-16 of its peak; 0 for m == 0.
double decay_cutoff(const RealFn& m, double limit, const char* what) {
  double peak = 0.0;
  std::vector<double> mags;
  for (int k = 0; k * 0.5 <= limit; ++k) {
    double v = std::abs(m(k * 0.5));
    if (!std::isfinite(v)) v = HUGE_VAL;
    mags.push_back(v);
    peak = std::max(peak, v);
  }
  if (peak == 0.0) return 0.0;
  for (std::size_t k = 1; k + 1 < mags.size(); ++k) {
    if (mags[k] < 1e-16 * peak && mags[k + 1] < 1e-16 * peak) {
      bool rest = true;
      for (std::size_t j = k; j < mags.size(); ++j) rest = rest && mags[j] < 1e-16 * peak;
      if (rest) return std::max(1.0, k * 0.5);
    }
  }
  throw TailError(std::string(what) + ": weighted data not negligible before tau = " + std::to_string(limit));
}

}  // namespace

// ---------------------------------------------------------------------------
// SampledFunction / TransformTable

SampledFunction SampledFunction::callable(RealFn f, DomainKind domain, double a, double b) {
  SampledFunction s;
  s.domain = domain;
  s.evaluate = std::move(f);
  s.decay_a = a;
  s.decay_b = b;
  return s;
}

SampledFunction SampledFunction::samples(std::vector<double> grid, std::vector<double> values, DomainKind domain,
                                         double a, double b) {
  if (grid.empty() || grid.size() != values.size()) throw DomainError("samples: grid and values must match");
  for (std::size_t i = 1; i < grid.size(); ++i) {
    if (!(grid[i] > grid[i - 1])) throw DomainError("samples: grid must be strictly increasing");
  }
  SampledFunction s;
  s.domain = domain;
  s.decay_a = a;
  s.decay_b = b;
  s.grid = std::move(grid);
  s.values = std::move(values);
  auto xs = s.grid;
  auto ys = s.values;
  s.evaluate = [xs, ys](double x) {
    if (x < xs.front() || x > xs.back()) return 0.0;
    return cubic_local(xs, ys, x);
  };
  return s;
}

SampledFunction SampledFunction::zero(DomainKind domain) {
  return callable([](double) { return 0.0; }, domain);
}

int SampledFunction::parity() const {
  if (domain != DomainKind::RealLine) return 0;
  const double pts[] = {0.3, 0.77, 1.3, 2.1, 3.4};
  double scale = 0.0;
  double even = 0.0;
  double odd = 0.0;
  for (double t : pts) {
    double p = evaluate(t);
    double m = evaluate(-t);
    scale = std::max({scale, std::abs(p), std::abs(m)});
    even = std::max(even, std::abs(p - m));
    odd = std::max(odd, std::abs(p + m));
  }
  if (even <= 1e-13 * scale) return 1;
  if (odd <= 1e-13 * scale) return -1;
  return 0;
}

void SampledFunction::check_decay() const {
  auto probe = [&](double x) { return std::abs(evaluate(x)); };
  double x1, x2, X1, X2;
  if (is_sampled()) {
    double lo = std::max(grid.front(), 1e-300);
    x1 = lo;
    x2 = grid.size() > 1 ? grid[1] : lo;
    X2 = grid.back();
    X1 = grid.size() > 1 ? grid[grid.size() - 2] : X2;
  } else {
    x1 = 1e-3;
    x2 = 1e-2;
    X1 = 1e2;
    X2 = 1e3;
  }
  if (x1 > 0.0 && x2 > x1) {
    double m1 = probe(x1) * std::pow(x1, decay_a);
    double m2 = probe(x2) * std::pow(x2, decay_a);
    if (m1 > 10.0 * m2 + 1e-300) throw DomainError("SampledFunction: magnitude near 0 contradicts decay_a");
  }
  if (X2 > X1 && X1 > 0.0) {
    double b = std::min(decay_b, 20.0);
    double m1 = probe(X1) * std::pow(X1, b);
    double m2 = probe(X2) * std::pow(X2, b);
    if (std::isfinite(m2) && m2 > 10.0 * m1 + 1e-300) {
      throw DomainError("SampledFunction: magnitude at infinity contradicts decay_b");
    }
  }
}

void TransformTable::validate() const {
  if (grid.empty() || grid.size() != values.size()) throw DomainError("TransformTable: grid and values must match");
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (!std::isfinite(grid[i]) || !std::isfinite(values[i])) throw DomainError("TransformTable: non-finite entry");
    if (i > 0 && !(grid[i] > grid[i - 1])) throw DomainError("TransformTable: grid must be strictly increasing");
  }
}

double TransformTable::at(double t) const {
  if (kind == TableKind::F) t = std::abs(t);
  if (t > grid.back() || t < grid.front()) {
    if (kind == TableKind::F && t < grid.front()) return values.front();
    return 0.0;
  }
  return cubic_local(grid, values, t);
}

std::vector<double> uniform_grid(double a, double b, double step) {
  if (!(step > 0.0) || !(b >= a)) throw DomainError("uniform_grid: need step > 0 and b >= a");
  long n = std::lround((b - a) / step);
  std::vector<double> g;
  g.reserve(n + 1);
  for (long i = 0; i <= n; ++i) g.push_back(a + i * step);
  return g;
}

double table_integral(const std::vector<double>& grid, const std::vector<double>& v) {
  const std::size_t n = grid.size();
  if (n < 2) return 0.0;
  double h = (grid.back() - grid.front()) / (n - 1);
  bool uniform = true;
  for (std::size_t i = 1; i < n; ++i) {
    if (std::abs(grid[i] - grid[i - 1] - h) > 1e-9 * h) uniform = false;
  }
  if (uniform && (n - 1) % 2 == 0) {
    double s = v.front() + v.back();
    for (std::size_t i = 1; i + 1 < n; ++i) s += (i % 2 ? 4.0 : 2.0) * v[i];
    return s * h / 3.0;
  }
  double s = 0.0;
  for (std::size_t i = 1; i < n; ++i) s += 0.5 * (grid[i] - grid[i - 1]) * (v[i] + v[i - 1]);
  return s;
}

// ---------------------------------------------------------------------------
// Mellin machinery

ComplexValue mellin_transform(const SampledFunction& f, ComplexValue s, const QuadratureConfig& cfg) {
  cfg.validate();
  if (!(s.real() > f.decay_a && s.real() < f.decay_b)) {
    throw StripError("mellin_transform: Re s = " + std::to_string(s.real()) + " outside (" +
                     std::to_string(f.decay_a) + ", " + std::to_string(f.decay_b) + ")");
  }
  const double tol = std::max(cfg.rel_tol, 1e-13);
  auto part = [&](bool imag) {
    RealFn g = [&, imag](double x) {
      if (!(x > 0.0)) return 0.0;
      double fx = f(x);
      if (fx == 0.0) return 0.0;
      ComplexValue w = std::exp((s - 1.0) * std::log(x));
      return fx * (imag ? w.imag() : w.real());
    };
    double head = integrate_finite(g, 0.0, 1.0, tol);
    double tail = exp_sinh_tail(g, 1.0);
    double v = head + tail;
    if (!std::isfinite(v)) throw ConvergenceError("mellin_transform: quadrature did not converge");
    return v;
  };
  double re = part(false);
  double im = s.imag() == 0.0 ? 0.0 : part(true);
  return {re, im};
}

ComplexValue mellin_inverse(const MellinFn& f_star, const ContourLine& line, double x, const QuadratureConfig& cfg) {
  MellinSymbol m;
  m.evaluate = f_star;
  m.name = "inverse Mellin";
  return mb_integral(m, line, x, cfg);
}

MellinLineTable::MellinLineTable(const SymbolFn& symbol, double abscissa, double step, double cutoff)
    : c_(abscissa), h_(step) {
  if (!(step > 0.0)) throw DomainError("MellinLineTable: step must be positive");
  std::vector<ComplexValue> pos;
  std::vector<ComplexValue> neg;
  double peak = 0.0;
  auto walk = [&](int dir, std::vector<ComplexValue>& out) {
    int quiet = 0;
    for (int k = 1; k < 40000; ++k) {
      ComplexValue v = symbol(ComplexValue(c_, dir * k * h_));
      if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
        throw ConvergenceError("MellinLineTable: non-finite symbol value");
      }
      out.push_back(v);
      double m = std::abs(v);
      peak = std::max(peak, m);
      if (m <= cutoff * peak && k * h_ > 5.0) {
        if (++quiet >= 4) return;
      } else {
        quiet = 0;
      }
    }
    throw TailError("MellinLineTable: symbol does not decay along the line");
  };
  ComplexValue v0 = symbol(ComplexValue(c_, 0.0));
  peak = std::abs(v0);
  walk(+1, pos);
  walk(-1, neg);
  values_.reserve(pos.size() + neg.size() + 1);
  for (auto it = neg.rbegin(); it != neg.rend(); ++it) values_.push_back(*it);
  values_.push_back(v0);
  for (auto& v : pos) values_.push_back(v);
  k0_ = static_cast<long>(neg.size());
}

double MellinLineTable::operator()(double x) const {
  if (!(x > 0.0)) throw DomainError("MellinLineTable: x must be positive");
  const double lx = std::log(x);
  double sum = 0.0;
  const long n = static_cast<long>(values_.size());
  for (long j = 0; j < n; ++j) {
    double t = (j - k0_) * h_;
    ComplexValue e = std::exp(ComplexValue(-c_ * lx, -t * lx));
    sum += (values_[j] * e).real();
  }
  return sum * h_ / (2 * kPi);
}

// ---------------------------------------------------------------------------
// Forward F

namespace {

struct FKernel {
  KernelOrder order;
  double tau;
  std::optional<KernelSeries> series;

  FKernel(const KernelOrder& o, double t) : order(o), tau(std::abs(t)) {
    if (tau >= kTauMin) series.emplace(o.alpha, tau);
  }
  double operator()(double x) const {
    if (series && x <= kSeriesMaxX) return series->eval(x).w;
    return weber_kernel(order, KernelPoint(x, tau));
  }
};

double half_line(const RealFn& g) {
  double head = integrate_finite(g, 0.0, 1.0, kQuadTol);
  double tail = exp_sinh_tail(g, 1.0);
  double v = head + tail;
  if (!std::isfinite(v)) throw ConvergenceError("half-line quadrature did not converge");
  return v;
}

SymbolFn psi_symbol(double a, const MellinFn& f_star, int gamma_power) {
  return [a, f_star, gamma_power](ComplexValue s) {
    ComplexValue l = log_gamma(1.0 - s + a) + double(gamma_power) * log_gamma(s) - log_gamma(s + a);
    return std::exp(l) * f_star(s);
  };
}

// The trapezoid rule with step h on the line Re s = c adds about e^{-2 pi c/h} psi(x e^{-2 pi/h}) to psi(x):
// a floor that the slow x^{-1/2} weight integrates up. Keep it below e^{-40}.
MellinLineTable line_table(const SymbolFn& symbol, const ContourLine& line) {
  const double h = std::max(0.01, std::min({line.step, 0.125, 2.0 * kPi * line.abscissa / 40.0}));
  return MellinLineTable(symbol, line.abscissa, h);
}

}  // namespace

double forward_f(const KernelOrder& order, const SampledFunction& f, double tau, const QuadratureConfig& cfg) {
  cfg.validate();
  FKernel w(order, tau);
  // the MB route used near tau = 0 cannot resolve x^{-s} for x below ~1e-16; |W| <= C x^{-gamma}
  // bounds what is dropped there by ~1e-12
  const double x_lo = w.series ? 0.0 : 1e-16;
  RealFn g = [&](double x) {
    if (!(x > x_lo) || x > kFarX) return 0.0;
    double fx = f(x);
    if (fx == 0.0) return 0.0;
    return w(x) * fx;
  };
  return half_line(g);
}

double forward_f_mellin(const KernelOrder& order, const MellinFn& f_star, double tau, const ContourLine& line) {
  check_strip(order.mb_strip(), line.abscissa, "forward_f_mellin");
  MellinSymbol k = kernel_symbol(order, tau);
  MellinSymbol m = symbol_multiply(k, [f_star](ComplexValue s) { return f_star(1.0 - s); });
  m.name = "Parseval form of F";
  ComplexValue v = mb_integral(m, line, 1.0);
  return std::cosh(kPi * tau) / std::pow(kPi, 2.5) * v.real();
}

Strip psi_strip(const KernelOrder& order) { return {0.0, 1.0 + order.alpha}; }

double psi_alpha(const KernelOrder& order, const MellinFn& f_star, double x, const ContourLine& line) {
  check_strip(psi_strip(order), line.abscissa, "psi_alpha");
  MellinSymbol m{psi_symbol(order.alpha, f_star, 1), psi_strip(order).lo, psi_strip(order).hi, "psi symbol"};
  return mb_integral(m, line, x).real();
}

double phi_alpha(const KernelOrder& order, const MellinFn& f_star, double x, const ContourLine& line) {
  check_strip(psi_strip(order), line.abscissa, "phi_alpha");
  MellinSymbol m{psi_symbol(order.alpha, f_star, 2), psi_strip(order).lo, psi_strip(order).hi, "phi symbol"};
  return mb_integral(m, line, x).real();
}

double forward_f_kl(const KernelOrder& order, const MellinFn& f_star, double tau, const ContourLine& line,
                    const QuadratureConfig& cfg) {
  cfg.validate();
  check_strip(psi_strip(order), line.abscissa, "forward_f_kl");
  MellinLineTable psi = line_table(psi_symbol(order.alpha, f_star, 1), line);
  RealFn g = [&](double x) {
    if (!(x > 0.0) || x > kFarX) return 0.0;
    return macdonald_k_scaled(tau, x) * psi(2.0 * x);
  };
  return 2.0 / (kPi * kPi) * half_line(g);
}

double forward_f_phi(const KernelOrder& order, const MellinFn& f_star, double tau, const ContourLine& line,
                     const QuadratureConfig& cfg) {
  cfg.validate();
  check_strip(psi_strip(order), line.abscissa, "forward_f_phi");
  MellinLineTable phi = line_table(psi_symbol(order.alpha, f_star, 2), line);
  RealFn g = [&](double x) {
    if (!(x > 0.0) || x > kFarX) return 0.0;
    double z = std::sqrt(x);
    double ki = macdonald_k_scaled(tau, z) * 2.0 * bessel_i_scaled(ComplexValue(0.0, tau), z).real();
    return ki * phi(x);
  };
  return half_line(g) / (kPi * kPi);
}

TransformTable tabulate_forward_f(const KernelOrder& order, const SampledFunction& f, const std::vector<double>& grid,
                                  const QuadratureConfig& cfg) {
  TransformTable t;
  t.kind = TableKind::F;
  t.grid = grid;
  t.values.assign(grid.size(), 0.0);
  parallel_for(grid.size(), [&](std::size_t i) { t.values[i] = forward_f(order, f, grid[i], cfg); });
  t.validate();
  return t;
}

// ---------------------------------------------------------------------------
// Forward G

GTransform::GTransform(const KernelOrder& order, const SampledFunction& g, const QuadratureConfig& cfg)
    : order_(order) {
  cfg.validate();
  parity_ = g.parity();
  if (parity_ == -1) return;  // the kernel is even in tau
  const bool real_line = g.domain == DomainKind::RealLine;
  auto folded = [&](double t) { return real_line ? g(t) + g(-t) : g(t); };
  cutoff_ = decay_cutoff([&](double t) { return folded(t) * std::cosh(kPi * t); }, 60.0, "forward_g");
  if (cutoff_ == 0.0) return;
  std::vector<double> w;
  gauss_nodes(0.0, cutoff_, static_cast<int>(std::lround(cutoff_ / 0.5)), tau_, w);
  weight_.resize(tau_.size());
  series_.reserve(tau_.size());
  for (std::size_t j = 0; j < tau_.size(); ++j) {
    weight_[j] = w[j] * folded(tau_[j]);
    series_.emplace_back(order.alpha, tau_[j]);
  }
}

double GTransform::operator()(double x) const {
  if (!(x > 0.0)) throw DomainError("forward_g: x must be positive");
  double sum = 0.0;
  if (x <= kSeriesMaxX) {
    for (std::size_t j = 0; j < tau_.size(); ++j) sum += weight_[j] * series_[j].eval(x).w;
  } else {
    for (std::size_t j = 0; j < tau_.size(); ++j) sum += weight_[j] * kernel_w_any(order_.alpha, tau_[j], x);
  }
  return sum;
}

double forward_g(const KernelOrder& order, const SampledFunction& g, double x, const QuadratureConfig& cfg) {
  return GTransform(order, g, cfg)(x);
}

TransformTable tabulate_forward_g(const KernelOrder& order, const SampledFunction& g, const std::vector<double>& grid,
                                  const QuadratureConfig& cfg) {
  GTransform G(order, g, cfg);
  TransformTable t;
  t.kind = TableKind::G;
  t.grid = grid;
  t.values.assign(grid.size(), 0.0);
  parallel_for(grid.size(), [&](std::size_t i) { t.values[i] = G(grid[i]); });
  t.validate();
  return t;
}

IdentityReport forward_g_mellin_check(const KernelOrder& order, const SampledFunction& g, const ContourLine& line,
                                      const QuadratureConfig& cfg, double t) {
  const double c = line.abscissa;
  check_strip(Strip{std::max(-order.alpha, 0.0), 0.5}, c, "forward_g_mellin_check");
  const ComplexValue s(c, t);
  GTransform G(order, g, cfg);

  // G decays like x^{-1/2}, too slowly to truncate: integrate to X, then fit
  // sqrt(x) G = A + B x^{-1/2} + C x^{-1} from samples beyond X and integrate that exactly
  const double X = 1e6;
  auto mellin_part = [&](bool imag) {
    RealFn h = [&, imag](double x) {
      if (!(x > 0.0)) return 0.0;
      ComplexValue w = std::exp((s - 1.0) * std::log(x));
      return G(x) * (imag ? w.imag() : w.real());
    };
    double head = integrate_finite(h, 0.0, 1.0, 1e-12);
    double body = gauss_panels([&](double u) { return h(std::exp(u)) * std::exp(u); }, 0.0, std::log(X),
                               static_cast<int>(std::ceil(2.0 * std::log(X))));
    return head + body;
  };
  ComplexValue gstar(mellin_part(false), t == 0.0 ? 0.0 : mellin_part(true));
  {
    double y[3], v[3];
    for (int k = 0; k < 3; ++k) {
      double x = X * std::pow(4.0, k);
      y[k] = 1.0 / std::sqrt(x);
      v[k] = G(x) / y[k];
    }
    // quadratic through (y_k, v_k), coefficients of 1, y, y^2
    double d01 = (v[1] - v[0]) / (y[1] - y[0]);
    double d12 = (v[2] - v[1]) / (y[2] - y[1]);
    double cq = (d12 - d01) / (y[2] - y[0]);
    double bq = d01 - cq * (y[0] + y[1]);
    double aq = v[0] - bq * y[0] - cq * y[0] * y[0];
    const double coef[3] = {aq, bq, cq};
    for (int k = 0; k < 3; ++k) {
      double p = 0.5 * (k + 1);  // x^{-p}
      gstar += coef[k] * std::exp((s - p) * std::log(X)) / (p - s);
    }
  }
  ComplexValue lhs = gstar * std::exp(log_gamma(1.0 + order.alpha - s) - log_gamma(order.alpha + s) - log_gamma(1.0 - s));

  ComplexValue rhs = 0.0;
  if (G.parity() != -1 && G.tau_cutoff() > 0.0) {
    const bool real_line = g.domain == DomainKind::RealLine;
    auto part = [&](bool imag) {
      RealFn h = [&, imag](double tau) {
        ComplexValue gg = std::exp(log_gamma(s + kI * tau) + log_gamma(s - kI * tau) + kPi * tau) *
                          (0.5 * (1.0 + std::exp(-2.0 * kPi * tau)));
        double gv = real_line ? g(tau) + g(-tau) : g(tau);
        return gv * (imag ? gg.imag() : gg.real());
      };
      return gauss_panels(h, 0.0, G.tau_cutoff(), static_cast<int>(std::lround(G.tau_cutoff() / 0.5)));
    };
    ComplexValue integral(part(false), t == 0.0 ? 0.0 : part(true));
    rhs = gamma_fn(0.5 - s) / std::pow(kPi, 2.5) * integral;
  }
  return make_report("mellin-of-G", lhs, rhs, 1e-5, 1e-12);
}

// ---------------------------------------------------------------------------
// F inversion

double inversion_kernel(double alpha, double tau, double x) {
  if (x <= kSeriesMaxX && tau > 0.0) return KernelSeries(alpha, tau).eval(x, op_inversion(alpha)).re;
  ReKernelValue rk = re_kernel_with_euler(alpha, tau, x);
  return alpha * alpha * re_tail_any(alpha, tau, x) + rk.euler;
}

namespace {

void require_positive_alpha(const KernelOrder& order, const char* what) {
  if (!(order.alpha > 0.0)) {
    throw ConstraintError(std::string(what) + ": requires alpha > 0 (got alpha = " + std::to_string(order.alpha) + ")");
  }
}

bool all_zero(const TransformTable& t) {
  return std::all_of(t.values.begin(), t.values.end(), [](double v) { return v == 0.0; });
}

std::vector<double> inversion_integrand(const KernelOrder& order, const TransformTable& Ff, double x) {
  std::vector<double> v(Ff.grid.size(), 0.0);
  parallel_for(Ff.grid.size(), [&](std::size_t i) {
    double tau = Ff.grid[i];
    if (tau == 0.0 || Ff.values[i] == 0.0) return;
    v[i] = tau * std::sinh(kPi * tau) * inversion_kernel(order.alpha, tau, x) * Ff.values[i];
  });
  return v;
}

}  // namespace

double invert_f(const KernelOrder& order, const TransformTable& Ff, double x, const ContourLine& line,
                const QuadratureConfig& cfg) {
  cfg.validate();
  require_positive_alpha(order, "invert_f");
  check_tau_table(Ff);
  check_strip(order.tail_strip(), line.abscissa, "invert_f");
  if (!(x > 0.0)) throw DomainError("invert_f: x must be positive");
  if (all_zero(Ff)) return 0.0;
  auto v = inversion_integrand(order, Ff, x);
  return -2.0 * kPi / x * table_integral(Ff.grid, v);
}

double invert_f_fd(const KernelOrder& order, const TransformTable& Ff, double x, double h) {
  require_positive_alpha(order, "invert_f_fd");
  check_tau_table(Ff);
  if (!(x > 0.0) || !(h > 0.0)) throw DomainError("invert_f_fd: x and h must be positive");
  if (all_zero(Ff)) return 0.0;
  const double a = order.alpha;
  // H(u) = int tau sinh(pi tau) T(e^u, tau) Ff(tau) d tau on the stencil u = log x + k h
  std::vector<std::vector<double>> rows(5, std::vector<double>(Ff.grid.size(), 0.0));
  const long double lx = std::log((long double)x);
  parallel_for(Ff.grid.size(), [&](std::size_t i) {
    double tau = Ff.grid[i];
    if (tau == 0.0 || Ff.values[i] == 0.0) return;
    std::optional<KernelSeries> ks;
    for (int k = 0; k < 5; ++k) {
      double xk = static_cast<double>(std::exp(lx + (k - 2) * (long double)h));
      double tail;
      if (xk <= kSeriesMaxX) {
        if (!ks) ks.emplace(a, tau);
        tail = ks->eval(xk, op_tail).re;
      } else {
        tail = re_tail_any(a, tau, xk);
      }
      rows[k][i] = tau * std::sinh(kPi * tau) * tail * Ff.values[i];
    }
  });
  double H[5];
  for (int k = 0; k < 5; ++k) H[k] = table_integral(Ff.grid, rows[k]);
  double d2 = (-H[0] + 16.0 * H[1] - 30.0 * H[2] + 16.0 * H[3] - H[4]) / (12.0 * h * h);
  return -2.0 * kPi / x * (a * a * H[2] - d2);
}

double invert_f_tail_share(const KernelOrder& order, const TransformTable& Ff, double x) {
  check_tau_table(Ff);
  auto v = inversion_integrand(order, Ff, x);
  double total = 0.0;
  double last = 0.0;
  const std::size_t n = v.size();
  for (std::size_t i = 0; i < n; ++i) {
    total += std::abs(v[i]);
    if (i >= n - n / 10) last += std::abs(v[i]);
  }
  return total > 0.0 ? last / total : 0.0;
}

namespace {

ComplexValue product_poly(double alpha, int N, ComplexValue s) {
  ComplexValue p = alpha * alpha - s * s;
  for (int n = 1; n <= N; ++n) p *= 1.0 - 4.0 * s * s / double(n * n);
  return p;
}

}  // namespace

double product_kernel_mb(const KernelOrder& order, double x, double tau, int N, const ContourLine& line,
                         const QuadratureConfig& cfg) {
  check_strip(order.mb_strip(), line.abscissa, "product_kernel_mb");
  const double a = order.alpha;
  MellinSymbol m = symbol_multiply(kernel_symbol(order, tau), [a, N](ComplexValue s) { return product_poly(a, N, s); });
  return std::cosh(kPi * tau) / std::pow(kPi, 2.5) * mb_integral(m, line, x, cfg).real();
}

double product_kernel_series(const KernelOrder& order, double x, double tau, int N) {
  const double a = order.alpha;
  ExponentOp op = [a, N](ComplexLD p) {
    ComplexLD v = (long double)a * a - p * p;
    for (int n = 1; n <= N; ++n) v *= 1.0L - 4.0L * p * p / (long double)(n * n);
    return v;
  };
  return KernelSeries(a, tau).eval(x, op).w;
}

double invert_f_product(const KernelOrder& order, const TransformTable& Ff, double x, int N, const ContourLine& line,
                        const QuadratureConfig& cfg) {
  require_positive_alpha(order, "invert_f_product");
  if (N < 0 || N > 5) throw DomainError("invert_f_product: N must lie in [0, 5]");
  check_tau_table(Ff);
  check_strip(order.mb_strip(), line.abscissa, "invert_f_product");
  if (!(x > 0.0)) throw DomainError("invert_f_product: x must be positive");
  if (all_zero(Ff)) return 0.0;
  std::vector<double> v(Ff.grid.size(), 0.0);
  parallel_for(Ff.grid.size(), [&](std::size_t i) {
    double tau = Ff.grid[i];
    if (tau == 0.0 || Ff.values[i] == 0.0) return;
    v[i] = tau * std::tanh(kPi * tau) * product_kernel_mb(order, x, tau, N, line, cfg) * Ff.values[i];
  });
  return 2.0 * kPi * kPi * table_integral(Ff.grid, v) / x;
}

// ---------------------------------------------------------------------------
// G inversion

namespace {

// alpha^2 int_y^inf Re[JY] dt/t + y d/dy Re[JY] at order alpha + i tau
double g_inversion_kernel(double alpha, double tau, double y) { return inversion_kernel(alpha, tau, y); }

}  // namespace

InvertGDiagnostics invert_g_ex(const KernelOrder& order, const SampledFunction& Gg, double x,
                               const QuadratureConfig& cfg) {
  cfg.validate();
  InvertGDiagnostics d;
  const double tau = std::abs(x);
  if (tau == 0.0) return d;
  if (Gg.is_sampled()) {
    for (std::size_t i = 1; i < Gg.grid.size(); ++i) {
      double y = Gg.grid[i];
      if (y > 1e-3 && (Gg.grid[i] - Gg.grid[i - 1]) > 0.1 * y) {
        throw DerivativeError("invert_g: Gg sampled too coarsely near y = " + std::to_string(y));
      }
    }
  }
  const double a = order.alpha;
  const double y_lo = 1e-20;
  const double u_lo = std::log(y_lo);
  const double u_hi = std::log(kSeriesMaxX);

  // y <= 64 in u = log y, one kernel series shared by all nodes
  KernelSeries ks(a, tau);
  ExponentOp op = op_inversion(a);
  RealFn inner = [&](double u) {
    double y = std::exp(u);
    double gv = Gg(y);
    if (gv == 0.0) return 0.0;
    return ks.eval(y, op).re * gv;
  };
  int panels = static_cast<int>(std::ceil((u_hi - u_lo) / 0.5));
  std::vector<double> un;
  std::vector<double> uw;
  gauss_nodes(u_lo, u_hi, panels, un, uw);
  std::vector<double> vals(un.size(), 0.0);
  parallel_for(un.size(), [&](std::size_t i) { vals[i] = uw[i] * inner(un[i]); });
  for (double v : vals) d.series_part += v;

  // y > 64 in z = sqrt y, half periods accelerated by Wynn epsilon
  RealFn outer = [&](double z) {
    double y = z * z;
    double gv = Gg(y);
    if (gv == 0.0) return 0.0;
    return 2.0 / z * g_inversion_kernel(a, tau, y) * gv;
  };
  d.outer_part = oscillatory_tail(outer, std::sqrt(kSeriesMaxX), kPi / 2, 1e-13, 600);

  // integrated-by-parts boundary products Re[JY] G and T y G'
  auto products = [&](double y) {
    double re = y <= kSeriesMaxX ? ks.eval(y).re : re_kernel_with_euler(a, tau, y).re;
    double tail = y <= kSeriesMaxX ? ks.eval(y, op_tail).re : re_tail_any(a, tau, y);
    double hy = 1e-4 * y;
    double dg = (Gg(y + hy) - Gg(y - hy)) / (2.0 * hy);
    return std::max(std::abs(re * Gg(y)), std::abs(tail * y * dg));
  };
  d.boundary_lo = products(y_lo);
  d.boundary_hi = products(1e6);

  d.value = -kPi * tau * std::sinh(kPi * tau) * (d.series_part + d.outer_part);
  return d;
}

double invert_g(const KernelOrder& order, const SampledFunction& Gg, double x, const QuadratureConfig& cfg) {
  return invert_g_ex(order, Gg, x, cfg).value;
}

// ---------------------------------------------------------------------------
// Nicholson specialization

double im_j_squared(double tau, double x) {
  if (!(x > 0.0)) throw DomainError("im_j_squared: x must be positive");
  ComplexValue j = bessel_j(ComplexValue(0.0, tau), std::sqrt(x));
  return (j * j).imag();
}

double nicholson_forward(const SampledFunction& f, double tau, const QuadratureConfig& cfg) {
  cfg.validate();
  const ComplexValue nu(0.0, std::abs(tau));
  RealFn g = [&](double x) {
    if (!(x > 0.0) || x > kFarX) return 0.0;
    double fx = f(x);
    if (fx == 0.0) return 0.0;
    double z = std::sqrt(x);
    ComplexValue j = bessel_j(nu, z);
    ComplexValue y = bessel_y(nu, z);
    return 0.5 * (j * j + y * y).real() * fx;
  };
  return half_line(g);
}

double nicholson_invert(const TransformTable& F0, double x, const QuadratureConfig& cfg) {
  cfg.validate();
  check_tau_table(F0);
  if (!(x > 0.0)) throw DomainError("nicholson_invert: x must be positive");
  if (all_zero(F0)) return 0.0;
  const double h = 1e-3 * x;
  double H[5];
  for (int k = 0; k < 5; ++k) {
    double xk = x + (k - 2) * h;
    std::vector<double> v(F0.grid.size(), 0.0);
    parallel_for(F0.grid.size(), [&](std::size_t i) {
      double tau = F0.grid[i];
      if (tau == 0.0 || F0.values[i] == 0.0) return;
      v[i] = tau * im_j_squared(tau, xk) * F0.values[i];
    });
    H[k] = table_integral(F0.grid, v);
  }
  double d1 = (H[0] - 8.0 * H[1] + 8.0 * H[3] - H[4]) / (12.0 * h);
  return -2.0 * kPi * d1;
}

// ---------------------------------------------------------------------------
// Parseval, norms, constants

ParsevalSides parseval_sides(const KernelOrder& order, const MellinFn& f_star, const TransformTable& Ff,
                             const ContourLine& line, double x_max) {
  check_strip(psi_strip(order), line.abscissa, "parseval_sides");
  check_tau_table(Ff);
  if (!(x_max > 0.0)) throw DomainError("parseval_sides: x_max must be positive");
  MellinLineTable psi(psi_symbol(order.alpha, f_star, 1), line.abscissa, std::min(line.step, 0.125));
  ParsevalSides p;
  p.x_max = x_max;
  p.lhs = integrate_finite(
      [&](double x) {
        double v = psi(x);
        return std::exp(x) * v * v * x;
      },
      0.0, x_max, kQuadTol);
  std::vector<double> v(Ff.grid.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    double t = Ff.grid[i];
    v[i] = t * std::sinh(kPi * t) * Ff.values[i] * Ff.values[i];
  }
  p.rhs = 4.0 * table_integral(Ff.grid, v);
  return p;
}

double lnorm(const SampledFunction& f, double gamma) {
  return half_line([&](double x) {
    if (!(x > 0.0) || x > kFarX) return 0.0;
    double fx = f(x);
    return fx == 0.0 ? 0.0 : std::abs(fx) * std::pow(x, -gamma);
  });
}

double l2norm(const SampledFunction& g) {
  const bool real_line = g.domain == DomainKind::RealLine;
  double v = half_line([&](double t) {
    double p = g(t);
    double m = real_line ? g(-t) : 0.0;
    return p * p + m * m;
  });
  return std::sqrt(v);
}

double theorem4_constant(const KernelOrder& order, double gamma) {
  check_strip(Strip{std::max(-order.alpha, 0.0), 0.25}, gamma, "theorem4_constant");
  const double a = order.alpha;
  RealFn h = [&](double t) {
    ComplexValue s(gamma, t);
    ComplexValue l = log_gamma(s + a) - log_gamma(1.0 + a - s) - log_sin_pi(s);
    return std::exp(l.real());
  };
  double integral = 2.0 * gauss_panels(h, 0.0, 24.0, 48);
  double pre = std::sqrt(std::exp((log_gamma(0.5 - 2.0 * gamma) + log_gamma(2.0 * gamma)).real())) /
               (2.0 * std::pow(kPi, 1.75));
  return pre * integral;
}

}  // namespace weberdex
