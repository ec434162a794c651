#pragma once

#include <string>
#include <vector>

#include "weberdex/mbquad.hpp"
#include "weberdex/report.hpp"

namespace weberdex {

/// int_0^inf Gamma(s+i tau)Gamma(s-i tau) cos(tau y) d tau = (pi/2^{2s}) Gamma(2s)/cosh^{2s}(y/2), Re s > 0.
IdentityReport check_gamma_cosine_pair(ComplexValue s, double y, const QuadratureConfig& cfg = {});
/// Gamma(s+i tau)Gamma(s-i tau) = (Gamma(2s)/2^{2s-1}) int_0^inf cos(tau y)/cosh^{2s}(y/2) dy.
IdentityReport check_gamma_cosine_reciprocal(ComplexValue s, double tau, const QuadratureConfig& cfg = {});

/// int_0^inf sinh^2(pi tau)|Gamma(s+i tau)Gamma(s-i tau)|^2 d tau in closed form, 0 < Re s < 1/4.
IdentityReport check_sinh_gamma_integral(ComplexValue s, const QuadratureConfig& cfg = {});
/// int_R cosh^2(pi tau)|Gamma(s+i tau)Gamma(s-i tau)|^2 d tau in closed form, 0 < Re s < 1/4.
IdentityReport check_cosh_gamma_integral(ComplexValue s, const QuadratureConfig& cfg = {});
/// Left side of the cosh identity, either folded to tau >= 0 and doubled or over the whole line.
double cosh_gamma_lhs(ComplexValue s, bool full_line);

/// Sine transform int_0^inf sin(t tau)/sinh^{2s}(t/2) dt against gammas, 0 < Re s < 1/2.
IdentityReport check_sine_gamma_pair(ComplexValue s, double tau, const QuadratureConfig& cfg = {});
/// Reciprocal int_0^inf sinh(pi tau)Gamma(s+i tau)Gamma(s-i tau) sin(t tau) d tau, 0 < Re s < 1/4.
IdentityReport check_sine_gamma_reciprocal(ComplexValue s, double t, const QuadratureConfig& cfg = {});
/// Left side of the reciprocal sine pair (oscillatory, Wynn accelerated).
ComplexValue sine_gamma_reciprocal_lhs(ComplexValue s, double t);

/// (1/pi) sinh(pi tau) e^{-x/2} K_{i tau}(x/2) = (1/x) int_0^inf e^{-t/x} Im[J^2_{i tau}(sqrt t)] dt as printed.
/// The note carries the residual with the sign of the right side reversed.
IdentityReport check_nicholson_kl(double tau, double x, const QuadratureConfig& cfg = {});

enum class MacdonaldForm {
  Cosh,  // sqrt(pi)/cosh(pi tau) e^{x/2} K(x/2) with Gamma(1/2 - s), 0 < gamma < 1/2
  Exp    // (1/sqrt(pi)) e^{-x/2} K(x/2) with 1/Gamma(1/2 + s), nu > 0
};
/// Mellin-Barnes representation of the Macdonald function against macdonald_k.
IdentityReport check_kl_macdonald_mb(double tau, double x, const ContourLine& line,
                                     MacdonaldForm form = MacdonaldForm::Cosh);
MellinSymbol macdonald_symbol(double tau, MacdonaldForm form);

/// Identity families in suite order.
std::vector<std::string> identity_families();

/// All identity checks on their parameter points; `only` filters by family (empty: all).
/// Runs in parallel, output order fixed.
std::vector<IdentityReport> run_identity_suite(const std::string& only = "");

}  // namespace weberdex
