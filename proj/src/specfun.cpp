#include "weberdex/specfun.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/gauss.hpp>

#include "weberdex/errors.hpp"

namespace weberdex {

namespace {

using boost::math::quadrature::gauss;

constexpr long double kPiL = 3.141592653589793238462643383279502884L;

// Godfrey's coefficients for g = 607/128.
constexpr double kLanczosG = 607.0 / 128.0;
constexpr std::array<double, 15> kLanczos = {
    0.99999999999999709182,     57.156235665862923517,      -59.597960355475491248,
    14.136097974741747174,      -0.49191381609762019978,    .33994649984811888699e-4,
    .46523628927048575665e-4,   -.98374475304879564677e-4,  .15808870322491248884e-3,
    -.21026444172410488319e-3,  .21743961811521264320e-3,   -.16431810653676389022e-3,
    .84418223983852743293e-4,   -.26190838401581408670e-4,  .36899182659531622704e-5};

void check_pole(ComplexValue z) {
  if (std::abs(z.imag()) < kEpsInt && z.real() < 0.5) {
    double n = std::round(z.real());
    if (n <= 0.0 && std::abs(z.real() - n) < kEpsInt) {
      throw PoleError("log_gamma: pole at nonpositive integer " + std::to_string(n));
    }
  }
}

ComplexValue lanczos_log_gamma(ComplexValue z) {
  // valid for Re z >= 0.5
  ComplexValue zm = z - 1.0;
  ComplexValue acc = kLanczos[0];
  for (int k = 1; k < 15; ++k) acc += kLanczos[k] / (zm + double(k));
  ComplexValue t = zm + kLanczosG + 0.5;
  return 0.5 * std::log(2.0 * kPi) + (zm + 0.5) * std::log(t) - t + std::log(acc);
}

bool is_nonpositive_integer(ComplexValue nu, int& n) {
  if (std::abs(nu.imag()) >= kEpsInt) return false;
  double r = std::round(nu.real());
  if (r > 0.0 || std::abs(nu.real() - r) >= kEpsInt) return false;
  n = static_cast<int>(-r);
  return true;
}

void check_args(const BesselOrder& nu, double x, const char* who) {
  if (!(x > 0.0) || !std::isfinite(x)) throw DomainError(std::string(who) + ": x must be positive");
  if (std::abs(nu.nu) > kOrderCap) throw DomainError(std::string(who) + ": |nu| above cap 50");
}

// Ascending series sum_k s^k (x/2)^{nu+2k} / (k! Gamma(nu+k+1)), s = -1 for J, +1 for I.
ComplexLD ascending_series(ComplexLD nu, long double x, int sign, const char* who) {
  long double h = x / 2.0L;
  ComplexLD t = std::exp(nu * std::log(h) - log_gamma_ld(nu + 1.0L));
  long double q = sign * h * h;
  ComplexLD sum = 0.0L;
  ComplexLD comp = 0.0L;
  long double peak = std::abs(t);
  for (int k = 0; k < 600; ++k) {
    // Kahan-compensated accumulation
    ComplexLD y = t - comp;
    ComplexLD s = sum + y;
    comp = (s - sum) - y;
    sum = s;
    t *= q / ((k + 1.0L) * (nu + (k + 1.0L)));
    peak = std::max(peak, std::abs(t));
    if (k > h && std::abs(t) <= 1e-21L * std::max(std::abs(sum), 1e-300L * peak)) return sum;
    if (std::abs(t) == 0.0L) return sum;
  }
  throw ConvergenceError(std::string(who) + ": ascending series budget exhausted");
}

ComplexLD j_series(ComplexLD nu, long double x) {
  int n = 0;
  if (is_nonpositive_integer(ComplexValue(double(nu.real()), double(nu.imag())), n) && n > 0) {
    ComplexLD v = ascending_series(ComplexLD(n, 0), x, -1, "bessel_j");
    return (n % 2) ? -v : v;
  }
  return ascending_series(nu, x, -1, "bessel_j");
}

ComplexLD i_series(ComplexLD nu, long double x) {
  int n = 0;
  if (is_nonpositive_integer(ComplexValue(double(nu.real()), double(nu.imag())), n) && n > 0) {
    return ascending_series(ComplexLD(n, 0), x, 1, "bessel_i");
  }
  return ascending_series(nu, x, 1, "bessel_i");
}

ComplexLD y_series(ComplexLD nu, long double x) {
  ComplexLD jn = j_series(nu, x);
  ComplexLD jm = j_series(-nu, x);
  return (jn * std::cos(nu * kPiL) - jm) / std::sin(nu * kPiL);
}

ComplexValue to_d(ComplexLD z) { return ComplexValue(double(z.real()), double(z.imag())); }

struct HankelJY {
  ComplexValue j;
  ComplexValue y;
};

bool hankel_jy(ComplexValue nu, double x, HankelJY& out) {
  HankelPQ pq;
  try {
    pq = hankel_pq(nu, x);
  } catch (const ConvergenceError&) {
    return false;
  }
  ComplexValue w = x - (nu / 2.0 + 0.25) * kPi;
  double amp = std::sqrt(2.0 / (kPi * x));
  ComplexValue c = std::cos(w);
  ComplexValue s = std::sin(w);
  out.j = amp * (pq.p * c - pq.q * s);
  out.y = amp * (pq.p * s + pq.q * c);
  return true;
}

// Sum of a_k(nu) (sign x)^{-k}; returns false if the asymptotic series stalls.
bool hankel_sum(ComplexValue nu, double x, double sign, ComplexValue& out) {
  ComplexValue mu = 4.0 * nu * nu;
  ComplexValue term = 1.0;
  ComplexValue sum = 1.0;
  double prev = 1.0;
  for (int k = 1; k < 200; ++k) {
    double odd = 2.0 * k - 1.0;
    term *= (mu - odd * odd) / (k * 8.0 * x * sign);
    double a = std::abs(term);
    if (a == 0.0) break;
    if (a > prev && k > 2) {
      if (prev > 1e-15 * std::abs(sum)) return false;
      break;
    }
    sum += term;
    prev = a;
    if (a <= 1e-17 * std::abs(sum)) break;
  }
  out = sum;
  return true;
}

}  // namespace

BesselOrder::BesselOrder(ComplexValue v, double eps_int) : nu(v) {
  double r = std::round(v.real());
  near_integer_flag = std::abs(v - ComplexValue(r, 0.0)) < eps_int;
}

ComplexValue log_gamma(ComplexValue z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) throw DomainError("log_gamma: non-finite argument");
  check_pole(z);
  if (z.real() >= 0.5) return lanczos_log_gamma(z);
  int n = static_cast<int>(std::ceil(0.5 - z.real()));
  ComplexValue shift = 0.0;
  for (int k = 0; k < n; ++k) shift += std::log(z + double(k));
  return lanczos_log_gamma(z + double(n)) - shift;
}

ComplexLD log_gamma_ld(ComplexLD z) {
  check_pole(to_d(z));
  static constexpr std::array<long double, 12> bern = {
      1.0L / 6,       -1.0L / 30,       1.0L / 42,         -1.0L / 30,
      5.0L / 66,      -691.0L / 2730,   7.0L / 6,          -3617.0L / 510,
      43867.0L / 798, -174611.0L / 330, 854513.0L / 138,   -236364091.0L / 2730};
  ComplexLD shift = 0.0L;
  // principal logs summed one by one keep the principal branch
  while (z.real() < 16.0L) {
    shift += std::log(z);
    z += 1.0L;
  }
  ComplexLD inv = 1.0L / z;
  ComplexLD inv2 = inv * inv;
  ComplexLD series = 0.0L;
  ComplexLD pw = inv;
  for (int k = 1; k <= 12; ++k) {
    series += bern[k - 1] / ((2.0L * k) * (2.0L * k - 1.0L)) * pw;
    pw *= inv2;
  }
  ComplexLD v = (z - 0.5L) * std::log(z) - z + 0.5L * std::log(2.0L * kPiL) + series;
  return v - shift;
}

ComplexValue gamma_fn(ComplexValue z) { return std::exp(log_gamma(z)); }

ComplexValue rgamma(ComplexValue z) {
  int n = 0;
  if (is_nonpositive_integer(z, n)) return 0.0;
  return std::exp(-log_gamma(z));
}

ComplexValue log_sin_pi(ComplexValue z) {
  const ComplexValue I(0.0, 1.0);
  const double ln2 = std::log(2.0);
  if (z.imag() >= 0.0) {
    return -I * kPi * z + I * (kPi / 2) - ln2 + std::log(1.0 - std::exp(2.0 * I * kPi * z));
  }
  return I * kPi * z - I * (kPi / 2) - ln2 + std::log(1.0 - std::exp(-2.0 * I * kPi * z));
}

std::vector<ComplexValue> hankel_coefficients(ComplexValue nu, int n) {
  std::vector<ComplexValue> a(std::max(n, 0));
  if (n <= 0) return a;
  ComplexValue mu = 4.0 * nu * nu;
  a[0] = 1.0;
  for (int k = 1; k < n; ++k) {
    double odd = 2.0 * k - 1.0;
    a[k] = a[k - 1] * (mu - odd * odd) / (8.0 * k);
  }
  return a;
}

HankelPQ hankel_pq(ComplexValue nu, double z) {
  ComplexValue mu = 4.0 * nu * nu;
  ComplexValue p = 1.0;
  ComplexValue q = 0.0;
  ComplexValue term = 1.0;
  double prev = 1.0;
  for (int k = 1; k < 200; ++k) {
    double odd = 2.0 * k - 1.0;
    term *= (mu - odd * odd) / (8.0 * k * z);
    double a = std::abs(term);
    if (a == 0.0) return {p, q};
    if (a > prev && k > 2) {
      double scale = std::max({std::abs(p), std::abs(q), 1e-300});
      if (prev > 1e-15 * scale) throw ConvergenceError("hankel_pq: asymptotic series does not reach tolerance");
      return {p, q};
    }
    // P collects even k, Q odd k, with alternating signs (-1)^{floor(k/2)}
    double sg = ((k / 2) % 2) ? -1.0 : 1.0;
    if (k % 2) q += sg * term;
    else p += sg * term;
    prev = a;
    if (a <= 1e-17 * std::max(std::abs(p), std::abs(q))) return {p, q};
  }
  throw ConvergenceError("hankel_pq: term budget exhausted");
}

ComplexValue bessel_j(const BesselOrder& nu, double x) {
  check_args(nu, x, "bessel_j");
  if (x > kXSwitch) {
    HankelJY h;
    if (hankel_jy(nu.nu, x, h)) return h.j;
    if (x > 2 * kXSwitch) throw ConvergenceError("bessel_j: large argument outside asymptotic range");
  }
  return to_d(j_series(ComplexLD(nu.nu.real(), nu.nu.imag()), x));
}

ComplexValue bessel_y(const BesselOrder& nu, double x) {
  check_args(nu, x, "bessel_y");
  if (nu.near_integer_flag) {
    return 0.5 * (bessel_y(BesselOrder(nu.nu + kDeltaReg, 0.0), x) +
                  bessel_y(BesselOrder(nu.nu - kDeltaReg, 0.0), x));
  }
  if (x > kXSwitch) {
    HankelJY h;
    if (hankel_jy(nu.nu, x, h)) return h.y;
    if (x > 2 * kXSwitch) throw ConvergenceError("bessel_y: large argument outside asymptotic range");
  }
  return to_d(y_series(ComplexLD(nu.nu.real(), nu.nu.imag()), x));
}

ComplexValue bessel_i_scaled(const BesselOrder& nu, double x) {
  check_args(nu, x, "bessel_i");
  if (x > kXSwitch) {
    ComplexValue s1;
    ComplexValue s2;
    if (hankel_sum(nu.nu, x, -1.0, s1) && hankel_sum(nu.nu, x, 1.0, s2)) {
      ComplexValue sn = std::sin(nu.nu * kPi);
      return (s1 - sn * std::exp(-2.0 * x) * s2) / std::sqrt(2.0 * kPi * x);
    }
    if (x > 2 * kXSwitch) throw ConvergenceError("bessel_i: large argument outside asymptotic range");
  }
  return to_d(i_series(ComplexLD(nu.nu.real(), nu.nu.imag()), x) * std::exp(-(long double)x));
}

ComplexValue bessel_i(const BesselOrder& nu, double x) {
  ComplexValue s = bessel_i_scaled(nu, x);
  return s * std::exp(x);
}

double macdonald_k_scaled(double tau, double x) {
  if (!(x > 0.0)) throw DomainError("macdonald_k: x must be positive");
  double t_end = std::acosh(1.0 + 42.0 / x);
  double width = std::min(0.5, 1.5 / (std::abs(tau) + 1.0));
  int panels = std::max(2, static_cast<int>(std::ceil(t_end / width)));
  if (panels > 200000) throw ConvergenceError("macdonald_k: panel budget exhausted");
  double h = t_end / panels;
  auto f = [&](double t) { return std::exp(-x * (std::cosh(t) - 1.0)) * std::cos(tau * t); };
  double sum = 0.0;
  for (int p = 0; p < panels; ++p) sum += gauss<double, 20>::integrate(f, p * h, (p + 1) * h);
  return sum;
}

double macdonald_k(double tau, double x) { return macdonald_k_scaled(tau, x) * std::exp(-x); }

ComplexValue anger_j(ComplexValue nu, double x) {
  if (!(x > 0.0)) throw DomainError("anger_j: x must be positive");
  int panels = std::max(4, static_cast<int>(std::ceil((std::abs(nu) + x) / 2.0)));
  if (panels > 100000) throw ConvergenceError("anger_j: panel budget exhausted");
  double h = kPi / panels;
  auto fr = [&](double th) { return std::cos(nu * th - x * std::sin(th)).real(); };
  auto fi = [&](double th) { return std::cos(nu * th - x * std::sin(th)).imag(); };
  double re = 0.0;
  double im = 0.0;
  for (int p = 0; p < panels; ++p) {
    re += gauss<double, 20>::integrate(fr, p * h, (p + 1) * h);
    if (nu.imag() != 0.0) im += gauss<double, 20>::integrate(fi, p * h, (p + 1) * h);
  }
  return ComplexValue(re, im) / kPi;
}

double schlafli_tail(double nu, double x) {
  if (!(x > 0.0)) throw DomainError("schlafli_tail: x must be positive");
  // w = sinh t, v = x w: (1/x) int_0^inf e^{-v} h(v/x) dv, h(w) = (w + sqrt(1+w^2))^{-nu} / sqrt(1+w^2)
  auto h = [&](double v) {
    double w = v / x;
    double r = std::hypot(1.0, w);
    return std::exp(-v - nu * std::asinh(w)) / r;
  };
  static thread_local boost::math::quadrature::exp_sinh<double> integrator;
  double err = 0.0;
  double val = integrator.integrate(h, 1e-14, &err);
  return val / (x * kPi);
}

ComplexValue anger_minus_bessel(ComplexValue nu, double x) {
  if (nu.imag() == 0.0) return std::sin(nu.real() * kPi) * schlafli_tail(nu.real(), x);
  // complex order: split exp(-i Im(nu) t) into cosine and sine parts in the t variable
  auto part = [&](bool imag_part) {
    auto h = [&, imag_part](double v) {
      double w = v / x;
      double t = std::asinh(w);
      double base = std::exp(-v - nu.real() * t) / std::hypot(1.0, w);
      return imag_part ? -base * std::sin(nu.imag() * t) : base * std::cos(nu.imag() * t);
    };
    static thread_local boost::math::quadrature::exp_sinh<double> integrator;
    double err = 0.0;
    return integrator.integrate(h, 1e-14, &err) / x;
  };
  ComplexValue integral(part(false), part(true));
  return std::sin(nu * kPi) / kPi * integral;
}

}  // namespace weberdex
