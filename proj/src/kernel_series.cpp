#include "weberdex/kernel_series.hpp"

#include <algorithm>
#include <cmath>

#include <boost/math/quadrature/gauss.hpp>

#include "weberdex/errors.hpp"

namespace weberdex {

namespace {

constexpr long double kPiL = 3.141592653589793238462643383279502884L;
const ComplexLD kIL(0.0L, 1.0L);

ComplexLD log_sin_pi_ld(ComplexLD z) {
  const long double ln2 = std::log(2.0L);
  if (z.imag() >= 0.0L) {
    return -kIL * kPiL * z + kIL * (kPiL / 2) - ln2 + std::log(1.0L - std::exp(2.0L * kIL * kPiL * z));
  }
  return kIL * kPiL * z - kIL * (kPiL / 2) - ln2 + std::log(1.0L - std::exp(-2.0L * kIL * kPiL * z));
}

}  // namespace

KernelSeries::KernelSeries(double alpha, double tau, int max_terms) : alpha_(alpha), tau_(std::abs(tau)) {
  if (!(alpha > -0.5)) throw DomainError("KernelSeries: alpha must exceed -1/2");
  if (!(tau_ > 0.0)) throw NearZeroTau("KernelSeries: tau must be nonzero");
  const long double a = alpha;
  const long double t = tau_;
  const ComplexLD nu(a, t);
  const ComplexLD nubar(a, -t);
  const long double ln4 = std::log(4.0L);

  // cot(nubar pi) split into its real part and Im(cot)/sinh(pi tau), written with E = e^{-pi tau}
  const long double e = std::exp(-kPiL * t);
  const long double s2 = std::pow(std::sin(kPiL * a), 2);
  const long double d = std::pow(1.0L - e * e, 2) + 4.0L * e * e * s2;
  const long double re_cot = std::sin(2.0L * kPiL * a) * 2.0L * e * e / d;
  const long double im_cot_sinh = 2.0L * e * (1.0L + e * e) / d;
  const long double log_sinh = kPiL * t + std::log1p(-e * e) - std::log(2.0L);

  ar_.resize(max_terms);
  aw_.resize(max_terms);
  br_.resize(max_terms);
  bw_.resize(max_terms);

  long double ak = std::exp(-a * ln4 - 2.0L * log_gamma_ld(nu + 1.0L).real());
  ComplexLD log_b0 = -kIL * t * ln4 - log_gamma_ld(nu + 1.0L) - log_gamma_ld(1.0L - nubar) - log_sin_pi_ld(nubar);
  ComplexLD bk = std::exp(log_b0);
  ComplexLD bwk = std::exp(log_b0 - log_sinh);
  for (int k = 0; k < max_terms; ++k) {
    ar_[k] = re_cot * ak;
    aw_[k] = im_cot_sinh * ak;
    br_[k] = bk;
    bw_[k] = bwk;
    const long double kk = k;
    long double ra = -(2 * a + 2 * kk + 1) * (2 * a + 2 * kk + 2) /
                     ((2 * a + kk + 1) * 4.0L * (kk + 1) * std::norm(nu + kk + 1.0L));
    ak *= ra;
    ComplexLD c = 2.0L * kIL * t;
    ComplexLD rb = -(c + 2 * kk + 1.0L) * (c + 2 * kk + 2.0L) /
                   ((c + kk + 1.0L) * 4.0L * (kk + 1) * (nu + kk + 1.0L) * (1.0L - nubar + kk));
    bk *= rb;
    bwk *= rb;
  }
}

KernelSeries::Value KernelSeries::eval(double x) const { return eval(x, op_identity); }

KernelSeries::Value KernelSeries::eval(double x, const ExponentOp& op) const {
  if (!(x > 0.0)) throw DomainError("KernelSeries: x must be positive");
  if (x > kSeriesMaxX * 1.0000001) throw DomainError("KernelSeries: x above series range");
  const long double lx = std::log((long double)x);
  const long double a = alpha_;
  long double xa = std::exp(a * lx);
  ComplexLD xb = std::exp(kIL * (long double)tau_ * lx);
  long double sum_ar = 0.0L;
  long double sum_aw = 0.0L;
  ComplexLD sum_br = 0.0L;
  ComplexLD sum_bw = 0.0L;
  long double peak = 0.0L;
  int quiet = 0;
  const int n = static_cast<int>(ar_.size());
  const int kmin = static_cast<int>(std::sqrt(x)) + 4;
  for (int k = 0; k < n; ++k) {
    ComplexLD pa(a + k, 0.0L);
    ComplexLD pb(k, (long double)tau_);
    long double oa = op(pa).real();
    ComplexLD ob = op(pb);
    long double ta_r = ar_[k] * oa * xa;
    long double ta_w = aw_[k] * oa * xa;
    ComplexLD tb_r = br_[k] * ob * xb;
    ComplexLD tb_w = bw_[k] * ob * xb;
    sum_ar += ta_r;
    sum_aw += ta_w;
    sum_br += tb_r;
    sum_bw += tb_w;
    long double mag = std::abs(ta_r) + std::abs(ta_w) + std::abs(tb_r) + std::abs(tb_w);
    peak = std::max(peak, mag);
    if (k > kmin && mag <= 1e-22L * peak) {
      if (++quiet >= 2) {
        Value v;
        v.re = static_cast<double>(sum_ar - sum_br.real());
        v.w = static_cast<double>(sum_aw - sum_bw.imag());
        return v;
      }
    } else {
      quiet = 0;
    }
    xa *= x;
    xb *= x;
  }
  throw ConvergenceError("KernelSeries: term budget exhausted");
}

ComplexLD op_identity(ComplexLD) { return 1.0L; }

ComplexLD op_tail(ComplexLD p) {
  if (std::abs(p) == 0.0L) throw DomainError("op_tail: zero exponent (integer alpha at tau = 0)");
  return -1.0L / p;
}

ComplexLD op_euler(ComplexLD p) { return p; }

ExponentOp op_inversion(double alpha) {
  long double a2 = (long double)alpha * alpha;
  return [a2](ComplexLD p) {
    if (std::abs(p) == 0.0L) throw DomainError("op_inversion: zero exponent");
    return (p * p - a2) / p;
  };
}

bool hankel_product(double alpha, double tau, double z, HankelProduct& out) {
  HankelPQ pq;
  try {
    pq = hankel_pq(ComplexValue(alpha, tau), z);
  } catch (const ConvergenceError&) {
    return false;
  }
  double pp = std::norm(pq.p);
  double qq = std::norm(pq.q);
  ComplexValue pqc = pq.p * std::conj(pq.q);
  double phi = 2.0 * z - alpha * kPi - kPi / 2;
  out.re = ((pp - qq) * std::sin(phi) + 2.0 * pqc.real() * std::cos(phi)) / (kPi * z);
  double coth = tau == 0.0 ? 0.0 : 1.0 / std::tanh(kPi * std::abs(tau));
  double sgn = tau < 0 ? -1.0 : 1.0;
  out.w = ((pp + qq) + 2.0 * coth * sgn * pqc.imag()) / (kPi * z);
  return true;
}

JYPair jy_product(double alpha, double tau, double z, bool with_derivative) {
  ComplexValue nu(alpha, tau);
  ComplexValue nb = std::conj(nu);
  ComplexValue j = bessel_j(nu, z);
  ComplexValue y = bessel_y(nb, z);
  JYPair out;
  out.jy = j * y;
  if (with_derivative) {
    ComplexValue dj = bessel_j(nu - 1.0, z) - nu / z * j;
    ComplexValue dy = bessel_y(nb - 1.0, z) - nb / z * y;
    out.djy = dj * y + j * dy;
  }
  return out;
}

ReKernelValue re_kernel_with_euler(double alpha, double tau, double y) {
  ReKernelValue v;
  if (y <= kSeriesMaxX && std::abs(tau) > 0.0) {
    KernelSeries ks(alpha, tau);
    v.re = ks.eval(y).re;
    v.euler = ks.eval(y, op_euler).re;
    return v;
  }
  double z = std::sqrt(y);
  JYPair p = jy_product(alpha, tau, z, true);
  v.re = p.jy.real();
  v.euler = 0.5 * z * p.djy.real();
  return v;
}

double re_tail_hankel(double alpha, double tau, double z) {
  const int n = 40;
  std::vector<ComplexValue> a = hankel_coefficients(ComplexValue(alpha, tau), n + 1);
  std::vector<ComplexValue> p(n + 1, 0.0);
  std::vector<ComplexValue> q(n + 1, 0.0);
  for (int k = 0; k <= n; ++k) {
    double sg = ((k / 2) % 2) ? -1.0 : 1.0;
    if (k % 2) q[k] = sg * a[k];
    else p[k] = sg * a[k];
  }
  const ComplexValue I(0.0, 1.0);
  const ComplexValue rot = std::exp(-I * (alpha * kPi + kPi / 2));
  const ComplexValue e2 = std::exp(2.0 * I * z);

  // E_m(z) = int_z^inf zeta^{-m} e^{2 i zeta} d zeta by its asymptotic series
  auto e_int = [&](int m) {
    ComplexValue sum = 0.0;
    ComplexValue term = 1.0;
    double prev = 1e300;
    for (int j = 0; j < 200; ++j) {
      double mag = std::abs(term);
      if (mag > prev) break;
      sum += term;
      prev = mag;
      if (mag < 1e-20 * std::abs(sum)) break;
      term *= double(m + j) * (-I / (2.0 * z));
    }
    return 0.5 * I * e2 * std::pow(z, -m) * sum;
  };

  double total = 0.0;
  double prev = 1e300;
  for (int m = 0; m <= n; ++m) {
    double am = 0.0;
    ComplexValue bm = 0.0;
    for (int i = 0; i <= m; ++i) {
      am += (p[i] * std::conj(p[m - i]) - q[i] * std::conj(q[m - i])).real();
      bm += p[i] * std::conj(q[m - i]);
    }
    double coef = std::abs(am) + 2.0 * std::abs(bm.real());
    double size = coef * std::pow(z, -m - 2);
    if (m > 2 && size > prev && size > 0.0) break;
    ComplexValue em = rot * e_int(m + 2);
    total += am * em.imag() + 2.0 * bm.real() * em.real();
    if (size > 0.0) prev = size;
    if (m > 2 && size < 1e-22) break;
  }
  return 2.0 / kPi * total;
}

double re_tail_any(double alpha, double tau, double y) {
  if (!(y > 0.0)) throw DomainError("re_tail: y must be positive");
  if (y <= kSeriesMaxX && std::abs(tau) > 0.0) {
    return KernelSeries(alpha, tau).eval(y, op_tail).re;
  }
  const double zc = 25.0;
  double z0 = std::sqrt(y);
  if (z0 >= zc) return re_tail_hankel(alpha, tau, z0);
  int panels = std::max(1, static_cast<int>(std::ceil((zc - z0) / (kPi / 4))));
  double h = (zc - z0) / panels;
  auto f = [&](double z) { return 2.0 * jy_product(alpha, tau, z, false).jy.real() / z; };
  double sum = 0.0;
  for (int k = 0; k < panels; ++k) {
    sum += boost::math::quadrature::gauss<double, 20>::integrate(f, z0 + k * h, z0 + (k + 1) * h);
  }
  return sum + re_tail_hankel(alpha, tau, zc);
}

double kernel_w_any(double alpha, double tau, double y) {
  double t = std::abs(tau);
  if (y <= kSeriesMaxX) return KernelSeries(alpha, t).eval(y).w;
  double z = std::sqrt(y);
  HankelProduct hp;
  if (z > kXSwitch && hankel_product(alpha, t, z, hp)) return hp.w;
  return jy_product(alpha, t, z, false).jy.imag() / std::sinh(kPi * t);
}

}  // namespace weberdex
