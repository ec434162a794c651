#include <functional>
#include <random>

#include "test_util.hpp"
#include "weberdex/errors.hpp"
#include "weberdex/quadrature.hpp"
#include "weberdex/specfun.hpp"

using namespace weberdex;
using C = ComplexValue;

TEST_SUITE("specfun") {

TEST_CASE("log_gamma closed forms") {
  CHECK_CPLX(log_gamma(1.0), 0.0, 0.0, 1e-15);
  CHECK_CPLX(log_gamma(0.5), 0.5 * std::log(kPi), 0.0, 1e-14);
  C g = std::exp(log_gamma(C(0.5, 0.7)));
  CHECK_REL(std::norm(g), kPi / std::cosh(0.7 * kPi), 1e-13);
  CHECK_CPLX(gamma_fn(5.0), 24.0, 0.0, 1e-14);
}

TEST_CASE("log_gamma against arbitrary-precision values") {
  // mpmath.loggamma, 30 digits
  CHECK_CPLX(log_gamma(C(3.7, -2.1)), 0.7853469580738224, -2.5830129251152623, 1e-13);
  CHECK_CPLX(log_gamma(C(-2.3, 0.4)), -0.40520869521992325, -8.456233662870943, 1e-13);
  CHECK_CPLX(log_gamma(C(20, 30)), 21.345074493863446, 96.71434768953618, 1e-13);
  CHECK_CPLX(log_gamma(C(0.25, 7.5)), -11.365620394646529, 7.220462821847432, 1e-13);
  CHECK_CPLX(log_gamma(C(0.001, 0.2)), 1.5764191509247967, -1.6777781742356446, 1e-13);
}

TEST_CASE("log_gamma poles") {
  CHECK_THROWS_AS(log_gamma(0.0), PoleError);
  CHECK_THROWS_AS(log_gamma(-3.0), PoleError);
  CHECK(rgamma(-2.0) == C(0.0));
}

TEST_CASE("extended log_gamma agrees with double") {
  for (C z : {C(0.3, 1.2), C(2.5, -7.0), C(0.05, 0.4)}) {
    ComplexLD w = log_gamma_ld(ComplexLD(z.real(), z.imag()));
    C d = log_gamma(z);
    CHECK(std::abs(C(double(w.real()), double(w.imag())) - d) < 1e-13 * std::max(1.0, std::abs(d)));
  }
}

TEST_CASE("Bessel half-integer closed forms") {
  CHECK_CPLX(bessel_j(0.5, 2.0), std::sqrt(2.0 / (kPi * 2.0)) * std::sin(2.0), 0.0, 1e-13);
  CHECK_CPLX(bessel_y(0.5, 2.0), -std::sqrt(2.0 / (kPi * 2.0)) * std::cos(2.0), 0.0, 1e-12);
  CHECK_CPLX(bessel_i(0.5, 1.0), std::sqrt(2.0 / kPi) * std::sinh(1.0), 0.0, 1e-13);
  CHECK_CPLX(bessel_j(0.0, 1e-12), 1.0, 0.0, 1e-15);
  CHECK_CPLX(bessel_i(0.0, 1e-12), 1.0, 0.0, 1e-15);
}

TEST_CASE("Bessel functions against high-precision series") {
  // mpmath.besselj / bessely / besseli, 30 digits
  CHECK_CPLX(bessel_j(C(0.3, 0.7), 1.5), 0.9374908527915314, 0.06640064911301344, 1e-11);
  CHECK_CPLX(bessel_y(C(0.25, 1.1), 3.0), 1.1928178153278666, 0.04759727540500587, 1e-11);
  CHECK_CPLX(bessel_j(C(0.5, 3.0), 12.0), -8.97301644023625, -6.640299082455499, 1e-11);
  CHECK_CPLX(bessel_i(C(0.1, 0.3), 2.0), 2.3290769619143687, -0.08704066400938469, 1e-11);
  C i30 = bessel_i(C(0.7, 0.2), 30.0);
  CHECK_REL(i30.real(), 775722432555.4468, 1e-11);
  CHECK_REL(i30.imag(), -3682369788.0537796, 1e-10);
  // integer order goes through the regularized average
  CHECK_CPLX(bessel_y(2.0, 1.7), -0.7869990531981856, 0.0, 1e-8);
}

TEST_CASE("large argument") {
  CHECK_CPLX(bessel_j(C(2.5, -1.0), 25.0), 0.01135897782894763, -0.3294482562885122, 1e-11);
  CHECK_CPLX(bessel_y(C(2.5, -1.0), 25.0), 0.3661627032874641, 0.010079613171139588, 1e-11);
  // either side of the series / Hankel switch
  CHECK_CPLX(bessel_j(C(0.25, 1.0), kXSwitch * (1 - 1e-9)), 0.4415345584500745, -0.023040260278669488, 1e-11);
  CHECK_CPLX(bessel_j(C(0.25, 1.0), kXSwitch * (1 + 1e-9)), 0.4415345590293847, -0.02304024407015842, 1e-11);
  CHECK_CPLX(bessel_j(C(0.0, 2.0), kXSwitch * (1 - 1e-9)), 1.9939018985619944, 0.5263586831289424, 1e-11);
  CHECK_CPLX(bessel_j(C(0.0, 2.0), kXSwitch * (1 + 1e-9)), 1.993901875344207, 0.5263587624863113, 1e-11);
}

TEST_CASE("Bessel domain errors") {
  CHECK_THROWS_AS(bessel_j(0.5, 0.0), DomainError);
  CHECK_THROWS_AS(bessel_y(0.5, -1.0), DomainError);
  CHECK_THROWS_AS(bessel_i(0.5, -1.0), DomainError);
  CHECK_THROWS_AS(macdonald_k(1.0, 0.0), DomainError);
}

TEST_CASE("near-integer flag") {
  CHECK(BesselOrder(2.0).near_integer_flag);
  CHECK(BesselOrder(C(2.0 + 1e-10, 0.0)).near_integer_flag);
  CHECK_FALSE(BesselOrder(C(2.0, 0.3)).near_integer_flag);
  CHECK_FALSE(BesselOrder(2.5).near_integer_flag);
}

TEST_CASE("Schwarz reflection") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> re(-1.5, 2.5), im(-3.0, 3.0), xs(0.1, 30.0);
  for (int k = 0; k < 20; ++k) {
    C nu(re(rng), im(rng));
    double x = xs(rng);
    CHECK(std::abs(bessel_j(std::conj(nu), x) - std::conj(bessel_j(nu, x))) <= 1e-12 * std::abs(bessel_j(nu, x)));
    CHECK(std::abs(bessel_y(std::conj(nu), x) - std::conj(bessel_y(nu, x))) <= 1e-12 * std::abs(bessel_y(nu, x)));
    CHECK(std::abs(bessel_i(std::conj(nu), x) - std::conj(bessel_i(nu, x))) <= 1e-12 * std::abs(bessel_i(nu, x)));
  }
  CHECK_CPLX(bessel_y(C(0.25, -0.9), 2.0), std::conj(bessel_y(C(0.25, 0.9), 2.0)).real(),
             std::conj(bessel_y(C(0.25, 0.9), 2.0)).imag(), 1e-14);
}

TEST_CASE("Wronskian and Bessel equation by differences") {
  const double h = 1e-4;
  for (C nu : {C(0.3, 0.7), C(0.25, -1.1), C(1.5, 2.0)}) {
    for (double x : {0.7, 2.0, 6.0, 15.0, 27.0}) {
      auto d = [&](auto f) { return (f(x + h) - f(x - h)) / (2 * h); };
      auto J = [&](double t) { return bessel_j(nu, t); };
      auto Y = [&](double t) { return bessel_y(nu, t); };
      C w = J(x) * d(Y) - d(J) * Y(x);
      CHECK(std::abs(w - 2.0 / (kPi * x)) <= 1e-7);

      const double h2 = 2.5e-4;
      for (auto f : {std::function<C(double)>(J), std::function<C(double)>(Y)}) {
        C u = f(x);
        C u1 = (f(x + h2) - f(x - h2)) / (2 * h2);
        C u2 = (f(x + h2) - 2.0 * u + f(x - h2)) / (h2 * h2);
        C terms[] = {x * x * u2, x * u1, (x * x - nu * nu) * u};
        double scale = 0.0;
        for (C t : terms) scale = std::max(scale, std::abs(t));
        CHECK(std::abs(terms[0] + terms[1] + terms[2]) <= 1e-6 * scale);
      }
    }
  }
}

TEST_CASE("modified Bessel bound") {
  C z(0.1, 0.3);
  for (double y : {0.5, 2.0, 10.0}) {
    CHECK(std::abs(bessel_i(z, y)) <= bessel_i(z.real(), y).real() * std::exp(kPi * std::abs(z.imag()) / 2));
  }
  CHECK_CPLX(bessel_i_scaled(C(0.1, 0.3), 2.0) * std::exp(2.0), 2.3290769619143687, -0.08704066400938469, 1e-11);
}

TEST_CASE("Macdonald function") {
  CHECK_CLOSE(macdonald_k(0.0, 1.0), 0.42102443824070834, 1e-12);
  CHECK_CLOSE(macdonald_k(1.2, 0.8), 0.2931930486670282, 1e-12);
  CHECK_CLOSE(macdonald_k(3.0, 0.05), -0.005610585973586815, 1e-12);
  CHECK(macdonald_k(-1.2, 0.8) == doctest::Approx(macdonald_k(1.2, 0.8)).epsilon(1e-15));
  CHECK_REL(macdonald_k_scaled(0.7, 40.0), macdonald_k(0.7, 40.0) * std::exp(40.0), 1e-11);
}

TEST_CASE("Macdonald-Bessel I integral") {
  // int_0^inf K_{ix}(y) I_z(y) dy/y = 1/(x^2 + z^2)
  const double x = 1.0, z = 0.2;
  double v = integrate_half_line(
      [&](double y) { return macdonald_k_scaled(x, y) * bessel_i_scaled(z, y).real() / y; }, 1e-12);
  CHECK_REL(v, 1.0 / (x * x + z * z), 1e-8);
}

TEST_CASE("Anger function") {
  CHECK_CPLX(anger_j(0.0, 2.0), bessel_j(0.0, 2.0).real(), 0.0, 1e-12);
  CHECK_CPLX(anger_j(3.0, 1.0), bessel_j(3.0, 1.0).real(), 0.0, 1e-12);
  CHECK_CPLX(anger_j(0.5, 2.0), 0.6304910925932393, 0.0, 1e-10);
  CHECK_CPLX(anger_j(C(1.5, 0.5), 3.0), 0.37536105809776776, 0.0780657624291671, 1e-10);
  // Schlafli form of the difference against the two direct evaluations
  C d = anger_minus_bessel(C(0.5, 0.0), 2.0);
  CHECK_CPLX(d, (anger_j(0.5, 2.0) - bessel_j(0.5, 2.0)).real(), 0.0, 1e-10);
}

TEST_CASE("Hankel expansion pieces") {
  auto a = hankel_coefficients(0.5, 4);
  CHECK(std::abs(a[0] - 1.0) < 1e-15);
  // 4 nu^2 = 1 makes every later coefficient vanish
  CHECK(std::abs(a[1]) < 1e-15);
  HankelPQ pq = hankel_pq(0.5, 30.0);
  CHECK_CPLX(pq.p, 1.0, 0.0, 1e-15);
  CHECK_CPLX(pq.q, 0.0, 0.0, 1e-15);
}

}  // TEST_SUITE
