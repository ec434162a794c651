#pragma once

#include <complex>
#include <vector>

namespace weberdex {

using ComplexValue = std::complex<double>;
using ComplexLD = std::complex<long double>;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kEpsInt = 1e-9;      // integer detection
inline constexpr double kDeltaReg = 1e-6;    // near-integer Y regularization
inline constexpr double kXSwitch = 20.0;     // series / Hankel switch
inline constexpr double kOrderCap = 50.0;    // |nu| cap

/// Bessel order with its near-integer flag.
struct BesselOrder {
  ComplexValue nu;
  bool near_integer_flag = false;

  BesselOrder(ComplexValue v, double eps_int = kEpsInt);  // NOLINT: implicit on purpose
  BesselOrder(double v) : BesselOrder(ComplexValue(v, 0.0)) {}  // NOLINT
};

/// Principal branch of log Gamma(z). Throws PoleError at nonpositive integers.
ComplexValue log_gamma(ComplexValue z);

/// Extended-precision log Gamma (Stirling after upward shift).
ComplexLD log_gamma_ld(ComplexLD z);

/// Gamma(z) and 1/Gamma(z); the reciprocal is 0 at the poles.
ComplexValue gamma_fn(ComplexValue z);
ComplexValue rgamma(ComplexValue z);

/// log sin(pi z), stable for large |Im z|.
ComplexValue log_sin_pi(ComplexValue z);

ComplexValue bessel_j(const BesselOrder& nu, double x);
ComplexValue bessel_y(const BesselOrder& nu, double x);
ComplexValue bessel_i(const BesselOrder& nu, double x);

/// e^{-x} I_nu(x); usable where I itself overflows.
ComplexValue bessel_i_scaled(const BesselOrder& nu, double x);

/// K_{i tau}(x), always real.
double macdonald_k(double tau, double x);

/// e^{x} K_{i tau}(x).
double macdonald_k_scaled(double tau, double x);

/// Anger function (1/pi) int_0^pi cos(nu theta - x sin theta) d theta.
ComplexValue anger_j(ComplexValue nu, double x);

/// (1/pi) int_0^inf exp(-nu t - x sinh t) dt for real nu (Schlafli integral).
/// Anger minus Bessel equals sin(nu pi) times this.
double schlafli_tail(double nu, double x);

/// Anger_nu(x) - J_nu(x) via the Schlafli integral.
ComplexValue anger_minus_bessel(ComplexValue nu, double x);

/// Hankel coefficients a_k(nu) = prod_{j<=k} (4nu^2 - (2j-1)^2) / (k! 8^k), k = 0..n-1.
std::vector<ComplexValue> hankel_coefficients(ComplexValue nu, int n);

/// Hankel P(nu,z), Q(nu,z) of the large-argument expansion.
struct HankelPQ {
  ComplexValue p;
  ComplexValue q;
};
HankelPQ hankel_pq(ComplexValue nu, double z);

}  // namespace weberdex
