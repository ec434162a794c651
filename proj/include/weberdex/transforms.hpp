#pragma once

#include <functional>
#include <limits>
#include <vector>

#include "weberdex/kernel.hpp"
#include "weberdex/kernel_series.hpp"
#include "weberdex/mbquad.hpp"
#include "weberdex/quadrature.hpp"
#include "weberdex/report.hpp"

namespace weberdex {

enum class DomainKind { HalfLine, RealLine };

/// f on (0, inf) or on the real line, from a callable or from samples.
/// decay_a, decay_b: f = O(x^{-a}) at 0 and O(x^{-b}) at infinity.
struct SampledFunction {
  DomainKind domain = DomainKind::HalfLine;
  RealFn evaluate;
  double decay_a = 0.0;
  double decay_b = std::numeric_limits<double>::infinity();
  std::vector<double> grid;  // empty for callables
  std::vector<double> values;

  static SampledFunction callable(RealFn f, DomainKind domain = DomainKind::HalfLine, double a = 0.0,
                                  double b = std::numeric_limits<double>::infinity());
  /// Local cubic interpolation between samples, zero outside the grid.
  static SampledFunction samples(std::vector<double> grid, std::vector<double> values,
                                 DomainKind domain = DomainKind::HalfLine, double a = 0.0,
                                 double b = std::numeric_limits<double>::infinity());
  static SampledFunction zero(DomainKind domain = DomainKind::HalfLine);

  double operator()(double x) const { return evaluate(x); }
  bool is_sampled() const { return !grid.empty(); }
  /// +1 even, -1 odd, 0 neither (checked on a few points).
  int parity() const;
  /// Throws DomainError when the magnitudes at the extremes contradict decay_a / decay_b
  /// by more than a factor 10.
  void check_decay() const;
};

enum class TableKind { F, G };

struct TransformTable {
  std::vector<double> grid;
  std::vector<double> values;
  TableKind kind = TableKind::F;

  /// Throws DomainError unless the grid is strictly increasing and values are finite.
  void validate() const;
  /// Interpolated value; F tables are even in tau, values beyond the grid are 0.
  double at(double t) const;
};

/// Uniform grid [a, b] with the given step.
std::vector<double> uniform_grid(double a, double b, double step);

/// Composite Simpson on a uniform grid with an even number of intervals, trapezoid otherwise.
double table_integral(const std::vector<double>& grid, const std::vector<double>& values);

using MellinFn = std::function<ComplexValue(ComplexValue)>;

ComplexValue mellin_transform(const SampledFunction& f, ComplexValue s, const QuadratureConfig& cfg = {});
ComplexValue mellin_inverse(const MellinFn& f_star, const ContourLine& line, double x,
                            const QuadratureConfig& cfg = {});

/// Trapezoid samples of a symbol along a line, reused for many x.
class MellinLineTable {
 public:
  MellinLineTable(const SymbolFn& symbol, double abscissa, double step, double cutoff = 1e-17);
  /// (1/2 pi i) int F(s) x^{-s} ds, real part.
  double operator()(double x) const;
  std::size_t nodes() const { return values_.size(); }

 private:
  double c_;
  double h_;
  long k0_ = 0;                       // index of t = 0
  std::vector<ComplexValue> values_;  // F(c + i (k - k0) h)
};

/// (F_alpha f)(tau) = int_0^inf W_alpha(x, tau) f(x) dx.
double forward_f(const KernelOrder& order, const SampledFunction& f, double tau, const QuadratureConfig& cfg = {});
/// Parseval form: (cosh(pi tau)/pi^{5/2}) (1/2 pi i) int Phi(s) f*(1-s) ds on the line.
double forward_f_mellin(const KernelOrder& order, const MellinFn& f_star, double tau, const ContourLine& line);
/// Kontorovich-Lebedev form (2/pi^2) int_0^inf K_{i tau}(x) e^x psi_alpha(2x) dx.
double forward_f_kl(const KernelOrder& order, const MellinFn& f_star, double tau, const ContourLine& line,
                    const QuadratureConfig& cfg = {});
/// Representation through K_{i tau}(sqrt x)[I_{i tau} + I_{-i tau}](sqrt x) and phi_alpha.
double forward_f_phi(const KernelOrder& order, const MellinFn& f_star, double tau, const ContourLine& line,
                     const QuadratureConfig& cfg = {});

/// Inverse Mellin of Gamma(1-s+alpha)Gamma(s)/Gamma(s+alpha) f*(s).
double psi_alpha(const KernelOrder& order, const MellinFn& f_star, double x, const ContourLine& line);
/// Inverse Mellin of Gamma(1-s+alpha)Gamma(s)^2/Gamma(s+alpha) f*(s).
double phi_alpha(const KernelOrder& order, const MellinFn& f_star, double x, const ContourLine& line);
/// Strip (0, 1 + alpha) shared by psi_alpha and phi_alpha (f* permitting).
Strip psi_strip(const KernelOrder& order);

/// forward_f on every grid point (tau >= 0), in parallel.
TransformTable tabulate_forward_f(const KernelOrder& order, const SampledFunction& f, const std::vector<double>& grid,
                                  const QuadratureConfig& cfg = {});

/// G_alpha g prepared once: Gauss nodes in tau, g folded to tau >= 0, kernel series per node.
class GTransform {
 public:
  GTransform(const KernelOrder& order, const SampledFunction& g, const QuadratureConfig& cfg = {});
  double operator()(double x) const;
  double tau_cutoff() const { return cutoff_; }
  int parity() const { return parity_; }
  std::size_t nodes() const { return tau_.size(); }

 private:
  KernelOrder order_;
  int parity_ = 0;
  double cutoff_ = 0.0;
  std::vector<double> tau_;
  std::vector<double> weight_;  // Gauss weight times (g(tau) + g(-tau))
  std::vector<KernelSeries> series_;
};

/// (G_alpha g)(x) = int W_alpha(x, tau) g(tau) d tau.
double forward_g(const KernelOrder& order, const SampledFunction& g, double x, const QuadratureConfig& cfg = {});
TransformTable tabulate_forward_g(const KernelOrder& order, const SampledFunction& g, const std::vector<double>& grid,
                                  const QuadratureConfig& cfg = {});

/// Mellin transform of G_alpha g against the gamma integral of g, at s = abscissa + i t.
IdentityReport forward_g_mellin_check(const KernelOrder& order, const SampledFunction& g, const ContourLine& line,
                                      const QuadratureConfig& cfg = {}, double t = 0.0);

/// (alpha^2 - (x d/dx)^2) int_x^inf Re[J Y](y) dy/y, from the residue series (x <= 64)
/// or the tail quadrature and the Euler derivative of the direct product above.
double inversion_kernel(double alpha, double tau, double x);

/// f(x) = -(2 pi / x) int_0^inf tau sinh(pi tau) R_alpha(x, tau) Ff(tau) d tau with
/// R_alpha = (alpha^2 - (x d/dx)^2) int_x^inf Re[J Y] dy/y applied in Mellin space.
double invert_f(const KernelOrder& order, const TransformTable& Ff, double x, const ContourLine& line,
                const QuadratureConfig& cfg = {});
/// Same formula with the operator applied by central differences in log x to the double integral.
double invert_f_fd(const KernelOrder& order, const TransformTable& Ff, double x, double h = 0.02);

/// Share of the inversion integral carried by the last tenth of the tau table (large values
/// mean Ff does not decay fast enough against the kernel weight).
double invert_f_tail_share(const KernelOrder& order, const TransformTable& Ff, double x);

/// x f(x) estimate of the truncated-product formula, divided by x.
double invert_f_product(const KernelOrder& order, const TransformTable& Ff, double x, int N, const ContourLine& line,
                        const QuadratureConfig& cfg = {});
/// The operator-applied kernel prod_{n<=N}(1 - 4 s^2/n^2)(alpha^2 - s^2) on the kernel symbol, by MB.
double product_kernel_mb(const KernelOrder& order, double x, double tau, int N, const ContourLine& line,
                         const QuadratureConfig& cfg = {});
/// The same operator applied termwise to the ascending series.
double product_kernel_series(const KernelOrder& order, double x, double tau, int N);

struct InvertGDiagnostics {
  double value = 0.0;
  double series_part = 0.0;   // y <= 64
  double outer_part = 0.0;    // y > 64, Wynn accelerated
  double boundary_lo = 0.0;   // boundary products at small y
  double boundary_hi = 0.0;   // boundary products at large y
};

/// g(x) = -pi x sinh(pi x) int_0^inf [alpha^2 int_y^inf Re[JY] dt/t + y d/dy Re[JY]] Gg(y) dy/y.
double invert_g(const KernelOrder& order, const SampledFunction& Gg, double x, const QuadratureConfig& cfg = {});
InvertGDiagnostics invert_g_ex(const KernelOrder& order, const SampledFunction& Gg, double x,
                               const QuadratureConfig& cfg = {});

/// Nicholson kernel transform (1/2) int [J^2_{i tau} + Y^2_{i tau}](sqrt x) f(x) dx.
double nicholson_forward(const SampledFunction& f, double tau, const QuadratureConfig& cfg = {});
/// f(x) = -2 pi d/dx int_0^inf tau Im[J^2_{i tau}(sqrt x)] F0(tau) d tau.
double nicholson_invert(const TransformTable& F0, double x, const QuadratureConfig& cfg = {});
/// Im[J_{i tau}(sqrt x)^2].
double im_j_squared(double tau, double x);

struct ParsevalSides {
  double lhs = 0.0;  // int_0^{X} e^x psi^2 x dx
  double rhs = 0.0;  // 4 int tau sinh(pi tau) F^2 d tau over the table
  double x_max = 0.0;
};
ParsevalSides parseval_sides(const KernelOrder& order, const MellinFn& f_star, const TransformTable& Ff,
                             const ContourLine& line, double x_max);

/// ||f||_{L_{1-gamma,1}} = int_0^inf |f(x)| x^{-gamma} dx.
double lnorm(const SampledFunction& f, double gamma);
/// ||g||_{L_2(R)}.
double l2norm(const SampledFunction& g);

/// Constant of sup_x x^gamma |G g(x)| <= C ||g||_2, without the norm factor.
double theorem4_constant(const KernelOrder& order, double gamma);

}  // namespace weberdex
