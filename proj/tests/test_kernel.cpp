#include "test_util.hpp"
#include "weberdex/errors.hpp"
#include "weberdex/kernel.hpp"
#include "weberdex/kernel_series.hpp"

using namespace weberdex;
using C = ComplexValue;

namespace {

struct WRow {
  double alpha, x, tau, w;
};

// W_alpha(x, tau) from mpmath (besselj/bessely at 40 digits)
const WRow kWGrid[] = {
    {-0.3, 0.5, 0.3, 0.5096486659533184},
    {-0.3, 0.5, 0.6, 0.5233710086442198},
    {-0.3, 0.5, 1.3, 0.49656667307372143},
    {-0.3, 0.5, 2, 0.43565291019145647},
    {-0.3, 1, 0.3, 0.35747206718245983},
    {-0.3, 1, 0.6, 0.3702660670667128},
    {-0.3, 1, 1.3, 0.37163658290044527},
    {-0.3, 1, 2, 0.34134089507982524},
    {-0.3, 2, 0.3, 0.24916220118393648},
    {-0.3, 2, 0.6, 0.2586741538246951},
    {-0.3, 2, 1.3, 0.26956048422550133},
    {-0.3, 2, 2, 0.25966158709566606},
    {-0.3, 5, 0.3, 0.15400296727424553},
    {-0.3, 5, 0.6, 0.1593106212853714},
    {-0.3, 5, 1.3, 0.16968200077968162},
    {-0.3, 5, 2, 0.17157805957985361},
    {0.25, 0.5, 0.3, 0.31948025792909013},
    {0.25, 0.5, 0.6, 0.25552560188309803},
    {0.25, 0.5, 1.3, 0.11793402809147283},
    {0.25, 0.5, 2, 0.06188860818206842},
    {0.25, 1, 0.3, 0.2483999565673176},
    {0.25, 1, 0.6, 0.21212498604719515},
    {0.25, 1, 1.3, 0.1217987965905984},
    {0.25, 1, 2, 0.07046995427154677},
    {0.25, 2, 0.3, 0.1888233059124254},
    {0.25, 2, 0.6, 0.16924450858638868},
    {0.25, 2, 1.3, 0.11498755559240274},
    {0.25, 2, 2, 0.07538397019521267},
    {0.25, 5, 0.3, 0.12768925979409068},
    {0.25, 5, 0.6, 0.11954016563508735},
    {0.25, 5, 1.3, 0.09486704152873998},
    {0.25, 5, 2, 0.07237906538790392},
    {0.4, 0.5, 0.3, 0.2878301653659334},
    {0.4, 0.5, 0.6, 0.21495964309989124},
    {0.4, 0.5, 1.3, 0.0785941750470419},
    {0.4, 0.5, 2, 0.03563257124956506},
    {0.4, 1, 0.3, 0.22845882633180423},
    {0.4, 1, 0.6, 0.18523210245429095},
    {0.4, 1, 1.3, 0.08982264453898434},
    {0.4, 1, 2, 0.04526963805115487},
    {0.4, 2, 0.3, 0.17683107345018673},
    {0.4, 2, 0.6, 0.15242515154733813},
    {0.4, 2, 1.3, 0.09151463006198228},
    {0.4, 2, 2, 0.053566818285638924},
    {0.4, 5, 0.3, 0.12195147838814524},
    {0.4, 5, 0.6, 0.11119083275659764},
    {0.4, 5, 1.3, 0.08128917764917717},
    {0.4, 5, 2, 0.057237764861498105},
    {0.5, 0.5, 0.3, 0.26964280403552154},
    {0.5, 0.5, 0.6, 0.19237567648030438},
    {0.5, 0.5, 1.3, 0.059438280384198953},
    {0.5, 0.5, 2, 0.024472617353840334},
    {0.5, 1, 0.3, 0.21670474255257183},
    {0.5, 1, 0.6, 0.1697613706175542},
    {0.5, 1, 1.3, 0.07316113676993369},
    {0.5, 1, 2, 0.03351931070202345},
    {0.5, 2, 0.3, 0.16959468764004107},
    {0.5, 2, 0.6, 0.14246304209562877},
    {0.5, 2, 1.3, 0.07859975562074238},
    {0.5, 2, 2, 0.04255289524633891},
    {0.5, 5, 0.3, 0.11839399965310084},
    {0.5, 5, 0.6, 0.10608038451684032},
    {0.5, 5, 1.3, 0.07338398952243606},
    {0.5, 5, 2, 0.04893157045856435},
    {0, 0.5, 0.3, 0.38779422381281925},
    {0, 0.5, 0.6, 0.3476397549320101},
    {0, 0.5, 1.3, 0.22748485851539235},
    {0, 0.5, 2, 0.15177705567182978},
    {0, 1, 0.3, 0.289487469248633},
    {0, 1, 0.6, 0.26975027533124335},
    {0, 1, 1.3, 0.20173395036559147},
    {0, 1, 2, 0.1451553866687501},
    {0, 2, 0.3, 0.2125121527103581},
    {0, 2, 0.6, 0.20348308870097703},
    {0, 2, 1.3, 0.16867421198014998},
    {0, 2, 2, 0.13243228261802675},
    {0, 5, 0.3, 0.13849311345105797},
    {0, 5, 0.6, 0.13559281817432411},
    {0, 5, 1.3, 0.12314525515942906},
    {0, 5, 2, 0.10702459984096437},
};

}  // namespace

TEST_SUITE("kernel") {

TEST_CASE("MB route against the arbitrary-precision grid") {
  for (const auto& r : kWGrid) {
    const KernelOrder o(r.alpha);
    double v = weber_kernel_mb(o, KernelPoint(r.x, r.tau));
    INFO("alpha=" << r.alpha << " x=" << r.x << " tau=" << r.tau);
    CHECK_CLOSE(v, r.w, 1e-10);
  }
}

TEST_CASE("three routes agree") {
  for (const auto& r : kWGrid) {
    const KernelOrder o(r.alpha);
    const KernelPoint p(r.x, r.tau);
    INFO("alpha=" << r.alpha << " x=" << r.x << " tau=" << r.tau);
    double mb = weber_kernel_mb(o, p);
    CHECK(std::abs(weber_kernel_direct(o, p) - mb) <= 1e-8 * (1 + std::abs(mb)));
    if (o.anger_ok()) CHECK(std::abs(weber_kernel_anger(o, p) - mb) <= 1e-6 * (1 + std::abs(mb)));
  }
  // the anger route on the negative-alpha branch
  const KernelOrder neg(-0.3);
  const KernelPoint p(2.0, 1.1);
  CHECK(std::abs(weber_kernel_anger(neg, p) - weber_kernel_mb(neg, p)) <= 1e-6);
}

TEST_CASE("evenness in tau") {
  const KernelOrder o(0.25);
  const KernelPoint a(2.0, 1.3), b(2.0, -1.3);
  CHECK(weber_kernel_direct(o, a) == doctest::Approx(weber_kernel_direct(o, b)).epsilon(1e-14));
  CHECK(weber_kernel_mb(o, a) == doctest::Approx(weber_kernel_mb(o, b)).epsilon(1e-14));
  CHECK(weber_kernel_anger(o, a) == doctest::Approx(weber_kernel_anger(o, b)).epsilon(1e-14));
  CHECK(weber_re_kernel(o, a) == doctest::Approx(weber_re_kernel(o, b)).epsilon(1e-14));
  CHECK(weber_kernel(o, a) == doctest::Approx(weber_kernel(o, b)).epsilon(1e-14));
}

TEST_CASE("tau = 0 through the MB route") {
  CHECK_CLOSE(weber_kernel_mb(KernelOrder(0.25), KernelPoint(1.0, 0.0)), 0.2634829793291141, 1e-10);
  CHECK_CLOSE(weber_kernel_mb(KernelOrder(0.5), KernelPoint(2.0, 0.0)), 0.18120560084582446, 1e-10);
  CHECK_THROWS_AS(weber_kernel_direct(KernelOrder(0.25), KernelPoint(1.0, 1e-4)), NearZeroTau);
  // the direct route approaches the same limit
  double near = weber_kernel_direct(KernelOrder(0.25), KernelPoint(1.0, 1e-3));
  CHECK(std::abs(near - 0.2634829793291141) < 1e-5);
  CHECK_CLOSE(weber_kernel(KernelOrder(0.25), KernelPoint(1.0, 0.0)), 0.2634829793291141, 1e-10);
}

TEST_CASE("Nicholson reduction at alpha = 0") {
  const double x = 2.0, tau = 1.0;
  C j = bessel_j(C(0.0, tau), std::sqrt(x));
  C y = bessel_y(C(0.0, tau), std::sqrt(x));
  double nich = 0.5 * (j * j + y * y).real();
  CHECK_CLOSE(weber_kernel_direct(KernelOrder(0.0), KernelPoint(x, tau)), nich, 1e-12);
  CHECK(std::abs((j * j + y * y).imag()) <= 1e-10);
}

TEST_CASE("constraint gates") {
  CHECK_THROWS_AS(weber_kernel_anger(KernelOrder(0.6), KernelPoint(1.0, 1.0)), ConstraintError);
  CHECK_THROWS_AS(weber_kernel_anger(KernelOrder(0.0), KernelPoint(1.0, 1.0)), ConstraintError);
  CHECK_THROWS_AS(kernel_ode_residual(KernelOrder(0.5), KernelPoint(2.0, 1.0), 1e-2), ConstraintError);
  CHECK_THROWS_AS(weber_kernel_mb(KernelOrder(0.25), KernelPoint(1.0, 1.0), ContourLine(0.6)), StripError);
  CHECK_THROWS_AS(weber_kernel_mb(KernelOrder(-0.3), KernelPoint(1.0, 1.0), ContourLine(0.2)), StripError);
  CHECK_THROWS_AS(KernelPoint(0.0, 1.0), DomainError);
  CHECK_THROWS_AS(bound_constant(KernelOrder(0.25), 0.5), StripError);
  CHECK(KernelOrder(-0.3).mb_strip().lo == doctest::Approx(0.3));
  CHECK(KernelOrder(0.25).mb_strip().lo == 0.0);
  CHECK(KernelOrder(0.25).mb_strip().hi == 0.5);
}

TEST_CASE("Re-kernel") {
  const KernelOrder o(0.5);
  CHECK_CLOSE(weber_re_kernel(o, KernelPoint(2.0, 0.8)), -0.13039050870973878, 1e-12);
  CHECK_CLOSE(weber_re_kernel_mb(o, KernelPoint(2.0, 0.8), default_re_line(o)), -0.13039050870973878, 1e-8);
  CHECK_CLOSE(weber_re_kernel(KernelOrder(0.25), KernelPoint(30.0, 1.5)), 0.053328243550695174, 1e-11);
  CHECK_CLOSE(weber_re_kernel(o, KernelPoint(900.0, 2.0)), 0.0018590679123958124, 1e-11);
  // real order: J_0(2) Y_0(2)
  double j0 = bessel_j(0.0, 2.0).real();
  double y0 = bessel_y(0.0, 2.0).real();
  CHECK_CLOSE(weber_re_kernel(KernelOrder(0.0), KernelPoint(4.0, 0.0)), j0 * y0, 1e-8);
}

TEST_CASE("Re-kernel tail") {
  const KernelOrder o(0.5);
  const ContourLine line = default_re_line(o);
  // mpmath quadosc of Re[J Y](y)/y over [x, inf)
  CHECK_CLOSE(re_kernel_tail(o, KernelPoint(1.0, 0.5), line), -0.06796812411254595, 1e-9);
  CHECK_CLOSE(re_kernel_tail(o, KernelPoint(3.0, 2.0), line), -0.015025416347435656, 1e-9);
  CHECK(std::abs(re_kernel_tail(o, KernelPoint(1.0, 0.5), line) -
                 re_kernel_tail_quadrature(o, KernelPoint(1.0, 0.5))) <= 1e-5);
  // d/dx of the tail is -Re[J Y](x)/x
  const double x = 2.0, h = 1e-3, tau = 0.5;
  double d = (re_kernel_tail(o, KernelPoint(x + h, tau), line) - re_kernel_tail(o, KernelPoint(x - h, tau), line)) /
             (2 * h);
  CHECK(std::abs(d + weber_re_kernel(o, KernelPoint(x, tau)) / x) <= 1e-6);
  double prev = HUGE_VAL;
  for (double xx : {10.0, 20.0, 40.0}) {
    double v = std::abs(re_kernel_tail(o, KernelPoint(xx, tau), line));
    CHECK(v < prev);
    prev = v;
  }
  CHECK_CLOSE(re_tail_any(0.5, 0.5, 1.0), -0.06796812411254595, 1e-10);
}

TEST_CASE("kernel engine") {
  // series, direct product and large argument against the oracle
  CHECK_CLOSE(weber_kernel(KernelOrder(0.25), KernelPoint(2.0, 1.3)), 0.11498755559240274, 1e-12);
  CHECK_CLOSE(kernel_w_any(0.5, 2.0, 900.0), 0.009904921248208935, 1e-11);
  CHECK_CLOSE(kernel_w_any(0.25, 4.0, 100.0), 0.02433253743411701, 1e-11);
  for (const auto& r : kWGrid) {
    if (r.tau < kTauMin) continue;
    KernelSeries ks(r.alpha, r.tau);
    CHECK_CLOSE(ks.eval(r.x).w, r.w, 1e-11);
  }
  // both sides of the series limit
  for (double tau : {0.3, 2.0}) {
    KernelSeries ks(0.5, tau);
    CHECK_CLOSE(ks.eval(kSeriesMaxX).w, kernel_w_any(0.5, tau, kSeriesMaxX * (1 + 1e-12)), 1e-10);
  }
}

TEST_CASE("fourth-order ODE residual") {
  for (double a : {-0.3, 0.25, 0.4}) {
    for (double x : {0.5, 1.0, 2.0, 5.0}) {
      for (double tau : {0.3, 0.6, 1.3, 2.0}) {
        OdeResidual r = kernel_ode_residual_ex(KernelOrder(a), KernelPoint(x, tau), 1e-2);
        INFO("alpha=" << a << " x=" << x << " tau=" << tau);
        CHECK(std::abs(r.residual) <= 1e-3 * r.scale);
      }
    }
  }
  OdeResidual z = kernel_ode_residual_ex(KernelOrder(0.0), KernelPoint(1.0, 0.5), 1e-2);
  CHECK(std::abs(z.residual) <= 1e-3 * z.scale);
}

TEST_CASE("ODE residual converges at second order") {
  const KernelOrder o(0.25);
  const KernelPoint p(2.0, 1.0);
  double r1 = std::abs(kernel_ode_residual(o, p, 2e-2));
  double r2 = std::abs(kernel_ode_residual(o, p, 1e-2));
  double order = std::log2(r1 / r2);
  INFO("order " << order);
  CHECK(order >= 1.7);
}

TEST_CASE("bound constant and the kernel estimate") {
  // Gauss-Kronrod in scipy of the modulus integral
  CHECK_CLOSE(bound_constant(KernelOrder(0.25), 0.25), 0.4406740520314394, 1e-10);
  CHECK_CLOSE(bound_constant(KernelOrder(0.5), 0.2), 0.4527089704720575, 1e-10);
  for (double a : {0.25, 0.4}) {
    for (double g : {0.1, 0.25, 0.45}) {
      const KernelOrder o(a);
      double c = bound_constant(o, g);
      CHECK(c > 0.0);
      for (double x : {0.1, 0.5, 1.0, 5.0, 30.0}) {
        for (double tau : {0.0, 0.5, 1.0, 2.0, 4.0}) {
          double w = weber_kernel(o, KernelPoint(x, tau));
          CHECK(std::abs(w) < c * std::pow(x, -g) * std::cosh(kPi * tau));
        }
      }
    }
  }
}

}  // TEST_SUITE
