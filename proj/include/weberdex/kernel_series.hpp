#pragma once

#include <functional>
#include <vector>

#include "weberdex/specfun.hpp"

namespace weberdex {

/// Largest x handled by the ascending product series.
inline constexpr double kSeriesMaxX = 64.0;

/// Factor applied to each power y^p of the series (p is the exponent).
using ExponentOp = std::function<ComplexLD(ComplexLD)>;

/// Ascending series of J_{alpha+i tau}(sqrt y) Y_{alpha-i tau}(sqrt y) in powers y^{alpha+k}, y^{i tau+k}.
///
/// JY = cot(nubar pi) sum_k a_k y^{alpha+k} - (1/sin(nubar pi)) sum_k b_k y^{i tau+k}
/// with nubar = alpha - i tau. Coefficients depend only on (alpha, tau) and are built once.
/// Linear operators that act on powers (x d/dx, the tail integral) are applied termwise.
class KernelSeries {
 public:
  KernelSeries(double alpha, double tau, int max_terms = 180);

  struct Value {
    double re = 0.0;  // Re[J Y]
    double w = 0.0;   // Im[J Y] / sinh(pi tau)
  };

  Value eval(double x) const;
  Value eval(double x, const ExponentOp& op) const;

  double alpha() const { return alpha_; }
  double tau() const { return tau_; }

 private:
  double alpha_;
  double tau_;
  std::vector<long double> ar_;   // Re(cot) a_k
  std::vector<long double> aw_;   // Im(cot)/sinh(pi tau) a_k
  std::vector<ComplexLD> br_;     // b_k / sin(nubar pi)
  std::vector<ComplexLD> bw_;     // b_k / (sin(nubar pi) sinh(pi tau))
};

/// Ops used across modules.
ComplexLD op_identity(ComplexLD p);
ComplexLD op_tail(ComplexLD p);          // int_x^inf y^p dy/y = -x^p/p
ComplexLD op_euler(ComplexLD p);         // x d/dx
ExponentOp op_inversion(double alpha);   // alpha^2 tail + x d/dx = (p^2 - alpha^2)/p

/// Hankel-form products for real z (large argument).
struct HankelProduct {
  double re = 0.0;  // Re[J_nu Y_nubar]
  double w = 0.0;   // Im[J_nu Y_nubar] / sinh(pi tau)
};
bool hankel_product(double alpha, double tau, double z, HankelProduct& out);

/// J_nu(z) Y_nubar(z) and its z-derivative from specfun.
struct JYPair {
  ComplexValue jy;
  ComplexValue djy;  // d/dz
};
JYPair jy_product(double alpha, double tau, double z, bool with_derivative);

/// Re[J Y] at y and y d/dy Re[J Y] at y, any y > 0.
struct ReKernelValue {
  double re = 0.0;
  double euler = 0.0;
};
ReKernelValue re_kernel_with_euler(double alpha, double tau, double y);

/// int_y^inf Re[J Y] dt/t for y > 0: series below kSeriesMaxX, quadrature plus Hankel remainder above.
double re_tail_any(double alpha, double tau, double y);

/// Hankel remainder 2 int_z^inf Re[J Y](zeta^2) dzeta / zeta, valid for z >= 25.
double re_tail_hankel(double alpha, double tau, double z);

/// Im[J Y]/sinh(pi tau) for any y > 0 and tau >= tau_min.
double kernel_w_any(double alpha, double tau, double y);

}  // namespace weberdex
