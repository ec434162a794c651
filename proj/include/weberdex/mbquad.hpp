#pragma once

#include <functional>
#include <string>

#include "weberdex/specfun.hpp"

namespace weberdex {

/// Vertical line Re s = abscissa, truncated at |Im s| <= height, trapezoid step.
struct ContourLine {
  double abscissa = 0.25;
  double height = 40.0;
  double step = 0.25;

  ContourLine() = default;
  explicit ContourLine(double c, double t = 40.0, double h = 0.25);
  /// Throws DomainError unless step > 0, height >= 5 and height/step is integral.
  void validate() const;
};

using SymbolFn = std::function<ComplexValue(ComplexValue)>;

/// Integrand factor F(s) (without x^{-s}) together with its validity strip.
struct MellinSymbol {
  SymbolFn evaluate;
  double strip_lo = -1e300;
  double strip_hi = 1e300;
  std::string name;

  bool contains(double c) const { return strip_lo < c && c < strip_hi; }
  ComplexValue operator()(ComplexValue s) const { return evaluate(s); }
};

struct QuadratureConfig {
  double rel_tol = 1e-12;
  double abs_tol = 1e-15;
  int max_refinements = 10;
  double tail_cutoff = 1e-18;  // nodes below tail_cutoff * peak end the sum

  void validate() const;
};

struct MBResult {
  ComplexValue value;
  double error_estimate = 0.0;
  double step = 0.0;     // final trapezoid step
  double extent = 0.0;   // largest |Im s| actually summed
  int refinements = 0;
};

/// (1/2 pi i) int_{c-iT}^{c+iT} F(s) x^{-s} ds by trapezoid with step halving.
MBResult mb_integral_ex(const MellinSymbol& symbol, const ContourLine& line, double x,
                        const QuadratureConfig& cfg = {});
ComplexValue mb_integral(const MellinSymbol& symbol, const ContourLine& line, double x,
                         const QuadratureConfig& cfg = {});

/// Same integral for symbols with only algebraic decay |t|^{-p} and a Stirling phase.
/// The two tails beyond |Im s| = height are added by integration by parts on log F.
MBResult mb_integral_algebraic(const MellinSymbol& symbol, const ContourLine& line, double x,
                               const QuadratureConfig& cfg = {});

/// |F(c+iT)| times 1/rate, rate fitted between heights T/2 and T. +inf when no decay.
double tail_bound(const MellinSymbol& symbol, const ContourLine& line);

/// (x d/dx)^k acting on x^{-s}: symbol times (-s)^k.
MellinSymbol apply_euler_operator(const MellinSymbol& symbol, int k);

/// Pointwise product with an entire factor; strip unchanged.
MellinSymbol symbol_multiply(const MellinSymbol& symbol, const SymbolFn& poly);

}  // namespace weberdex
