#include "weberdex/mbquad.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "weberdex/errors.hpp"
#include "weberdex/quadrature.hpp"

namespace weberdex {

namespace {

const ComplexValue kI(0.0, 1.0);

struct LineSampler {
  const MellinSymbol& symbol;
  double c;
  double logx;

  ComplexValue operator()(double t) const {
    ComplexValue s(c, t);
    ComplexValue f = symbol.evaluate(s);
    if (f == 0.0) return 0.0;
    return f * std::exp(-s * logx);
  }
};

void check_strip(const MellinSymbol& symbol, double c) {
  if (!symbol.contains(c)) {
    throw StripError("abscissa " + std::to_string(c) + " outside strip (" + std::to_string(symbol.strip_lo) +
                     ", " + std::to_string(symbol.strip_hi) + ") of " +
                     (symbol.name.empty() ? std::string("symbol") : symbol.name));
  }
}

// Sum of G over nodes j*h, j in [jlo, jhi] with stride; values computed in parallel, summed in order.
ComplexValue sum_nodes(const LineSampler& g, double h, long jlo, long jhi, long stride) {
  std::vector<long> idx;
  for (long j = jlo; j <= jhi; ++j) {
    if (((j % stride) + stride) % stride == 0 && stride > 1) continue;
    idx.push_back(j);
  }
  std::vector<ComplexValue> vals(idx.size());
  auto body = [&](std::size_t k) { vals[k] = g(idx[k] * h); };
  if (idx.size() > 512) parallel_for(idx.size(), body);
  else for (std::size_t k = 0; k < idx.size(); ++k) body(k);
  ComplexValue sum = 0.0;
  for (const auto& v : vals) sum += v;
  return sum;
}

}  // namespace

ContourLine::ContourLine(double c, double t, double h) : abscissa(c), height(t), step(h) {}

void ContourLine::validate() const {
  if (!(step > 0.0)) throw DomainError("ContourLine: step must be positive");
  if (!(height >= 5.0)) throw DomainError("ContourLine: height must be at least 5");
  double n = height / step;
  if (std::abs(n - std::round(n)) > 1e-9 * n) throw DomainError("ContourLine: height/step must be an integer");
}

void QuadratureConfig::validate() const {
  if (!(rel_tol > 0.0) || !(abs_tol > 0.0)) throw DomainError("QuadratureConfig: tolerances must be positive");
  if (max_refinements < 1) throw DomainError("QuadratureConfig: max_refinements must be >= 1");
}

double tail_bound(const MellinSymbol& symbol, const ContourLine& line) {
  double c = line.abscissa;
  double t = line.height;
  double a = std::max(std::abs(symbol.evaluate(ComplexValue(c, t))), std::abs(symbol.evaluate(ComplexValue(c, -t))));
  double b = std::max(std::abs(symbol.evaluate(ComplexValue(c, t / 2))),
                      std::abs(symbol.evaluate(ComplexValue(c, -t / 2))));
  if (a == 0.0) return 0.0;
  if (!(b > a) || !std::isfinite(a)) return std::numeric_limits<double>::infinity();
  double rate = std::log(b / a) / (t / 2);
  return a / rate;
}

MBResult mb_integral_ex(const MellinSymbol& symbol, const ContourLine& line, double x, const QuadratureConfig& cfg) {
  line.validate();
  cfg.validate();
  check_strip(symbol, line.abscissa);
  if (!(x > 0.0)) throw DomainError("mb_integral: x must be positive");
  LineSampler g{symbol, line.abscissa, std::log(x)};
  const double h0 = line.step;
  double height = line.height;

  // Level 0: walk outward until the integrand is negligible on each side.
  auto walk = [&](int dir, double peak, double& last_mag) -> long {
    long j = 0;
    int quiet = 0;
    for (;;) {
      j += 1;
      double t = dir * j * h0;
      if (std::abs(t) > height) return j - 1;
      double m = std::abs(g(t));
      last_mag = m;
      if (m < cfg.tail_cutoff * peak) {
        if (++quiet >= 4) return j;
      } else {
        quiet = 0;
      }
    }
  };
  ComplexValue g0 = g(0.0);
  // a rough peak estimate over the truncated range keeps the cutoff relative
  double peak = std::abs(g0);
  for (double t = -height; t <= height; t += 1.0) peak = std::max(peak, std::abs(g(t)));
  if (!std::isfinite(peak)) throw ConvergenceError("mb_integral: non-finite integrand on " + symbol.name);

  long jp = 0;
  long jm = 0;
  double last_p = 0.0;
  double last_m = 0.0;
  for (int ext = 0;; ++ext) {
    jp = walk(+1, peak, last_p);
    jm = walk(-1, peak, last_m);
    bool decayed = (jp * h0 < height) && (jm * h0 < height);
    if (decayed) break;
    ContourLine probe(line.abscissa, height, h0);
    double tb = tail_bound(symbol, probe) * std::exp(-line.abscissa * std::log(x)) / (2 * kPi);
    if (tb <= cfg.abs_tol) break;
    if (ext >= 3) throw TailError("mb_integral: tail bound " + std::to_string(tb) + " above abs_tol for " + symbol.name);
    height *= 2.0;
  }

  double tail_est = (last_p + last_m) / (2 * kPi);
  ComplexValue sum = sum_nodes(g, h0, -jm, jp, 1);
  double h = h0;
  ComplexValue prev = h * sum / (2 * kPi);
  long lo = -jm;
  long hi = jp;
  for (int level = 1; level <= cfg.max_refinements; ++level) {
    h /= 2.0;
    lo *= 2;
    hi *= 2;
    sum += sum_nodes(g, h, lo, hi, 2);
    ComplexValue cur = h * sum / (2 * kPi);
    double delta = std::abs(cur - prev);
    if (delta <= std::max(cfg.rel_tol * std::abs(cur), cfg.abs_tol)) {
      MBResult r;
      r.value = cur;
      r.error_estimate = delta + tail_est;
      r.step = h;
      r.extent = std::max(hi, -lo) * h;
      r.refinements = level;
      return r;
    }
    prev = cur;
  }
  throw ConvergenceError("mb_integral: refinement budget exhausted for " + symbol.name);
}

ComplexValue mb_integral(const MellinSymbol& symbol, const ContourLine& line, double x, const QuadratureConfig& cfg) {
  return mb_integral_ex(symbol, line, x, cfg).value;
}

MBResult mb_integral_algebraic(const MellinSymbol& symbol, const ContourLine& line, double x,
                               const QuadratureConfig& cfg) {
  line.validate();
  cfg.validate();
  check_strip(symbol, line.abscissa);
  if (!(x > 0.0)) throw DomainError("mb_integral: x must be positive");
  LineSampler g{symbol, line.abscissa, std::log(x)};
  const double T = line.height;

  // Endpoint tails from log-derivative kappa = (log G)': int_T^inf G ~ -G/kappa - G kappa'/kappa^3
  const double d = 1e-3;
  auto end_terms = [&](double t, ComplexValue& tail, ComplexValue& deriv) {
    ComplexValue gm = g(t - d);
    ComplexValue g0 = g(t);
    ComplexValue gp = g(t + d);
    ComplexValue lp = std::log(gp / g0);
    ComplexValue lm = std::log(g0 / gm);
    ComplexValue kappa = (lp + lm) / (2 * d);
    ComplexValue dkappa = (lp - lm) / (d * d);
    tail = g0 / kappa + g0 * dkappa / (kappa * kappa * kappa);
    deriv = kappa * g0;
  };
  ComplexValue tp;
  ComplexValue dp;
  ComplexValue tm;
  ComplexValue dm;
  end_terms(T, tp, dp);
  end_terms(-T, tm, dm);
  ComplexValue tails = -tp + tm;

  long n = std::lround(T / line.step);
  double h = line.step;
  ComplexValue gT = g(T);
  ComplexValue gmT = g(-T);
  ComplexValue sum = sum_nodes(g, h, -n + 1, n - 1, 1) + 0.5 * (gT + gmT);
  auto assemble = [&](double step) {
    // trapezoid plus the first Euler-Maclaurin endpoint term
    ComplexValue trap = step * sum - step * step / 12.0 * (dp - dm);
    return (trap + tails) / (2 * kPi);
  };
  ComplexValue prev = assemble(h);
  for (int level = 1; level <= cfg.max_refinements; ++level) {
    h /= 2.0;
    n *= 2;
    sum += sum_nodes(g, h, -n + 1, n - 1, 2);
    ComplexValue cur = assemble(h);
    double delta = std::abs(cur - prev);
    if (delta <= std::max(cfg.rel_tol * std::abs(cur), cfg.abs_tol)) {
      MBResult r;
      r.value = cur;
      r.error_estimate = delta + std::abs(tails) * 1e-3;
      r.step = h;
      r.extent = T;
      r.refinements = level;
      return r;
    }
    prev = cur;
  }
  throw ConvergenceError("mb_integral_algebraic: refinement budget exhausted for " + symbol.name);
}

MellinSymbol apply_euler_operator(const MellinSymbol& symbol, int k) {
  if (k < 0) throw DomainError("apply_euler_operator: k must be nonnegative");
  if (k == 0) return symbol;
  MellinSymbol out = symbol;
  SymbolFn base = symbol.evaluate;
  out.evaluate = [base, k](ComplexValue s) {
    ComplexValue m = 1.0;
    for (int i = 0; i < k; ++i) m *= -s;
    return m * base(s);
  };
  out.name = "(x d/dx)^" + std::to_string(k) + " " + symbol.name;
  return out;
}

MellinSymbol symbol_multiply(const MellinSymbol& symbol, const SymbolFn& poly) {
  MellinSymbol out = symbol;
  SymbolFn base = symbol.evaluate;
  out.evaluate = [base, poly](ComplexValue s) { return poly(s) * base(s); };
  return out;
}

}  // namespace weberdex
