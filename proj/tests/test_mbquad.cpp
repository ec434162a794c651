#include "test_util.hpp"
#include "weberdex/errors.hpp"
#include "weberdex/kernel.hpp"
#include "weberdex/mbquad.hpp"

using namespace weberdex;
using C = ComplexValue;

namespace {

MellinSymbol gamma_symbol() {
  MellinSymbol m;
  m.evaluate = [](C s) { return gamma_fn(s); };
  m.strip_lo = 0.0;
  m.name = "Gamma(s)";
  return m;
}

MellinSymbol beta_symbol() {
  MellinSymbol m;
  m.evaluate = [](C s) { return std::exp(log_gamma(s) + log_gamma(1.0 - s)); };
  m.strip_lo = 0.0;
  m.strip_hi = 1.0;
  m.name = "Gamma(s)Gamma(1-s)";
  return m;
}

}  // namespace

TEST_SUITE("mbquad") {

TEST_CASE("Mellin pairs") {
  CHECK_CLOSE(mb_integral(gamma_symbol(), ContourLine(1.0), 2.0).real(), std::exp(-2.0), 1e-12);
  CHECK_CLOSE(mb_integral(beta_symbol(), ContourLine(0.5), 1.0).real(), 0.5, 1e-12);
  CHECK_CLOSE(mb_integral(beta_symbol(), ContourLine(0.3), 3.0).real(), 0.25, 1e-12);
}

TEST_CASE("strip and argument checks") {
  CHECK_THROWS_AS(mb_integral(beta_symbol(), ContourLine(1.2), 1.0), StripError);
  CHECK_THROWS_AS(mb_integral(gamma_symbol(), ContourLine(-0.5), 1.0), StripError);
  CHECK_THROWS_AS(mb_integral(gamma_symbol(), ContourLine(1.0), 0.0), DomainError);
  CHECK_THROWS_AS(ContourLine(0.5, 4.0).validate(), DomainError);
  CHECK_THROWS_AS(ContourLine(0.5, 40.0, 0.3).validate(), DomainError);
  CHECK_THROWS_AS(ContourLine(0.5, 40.0, 0.0).validate(), DomainError);
  QuadratureConfig bad;
  bad.rel_tol = 0.0;
  CHECK_THROWS_AS(bad.validate(), DomainError);
  bad = QuadratureConfig{};
  bad.max_refinements = 0;
  CHECK_THROWS_AS(bad.validate(), DomainError);
}

TEST_CASE("tail bound") {
  MellinSymbol k = kernel_symbol(KernelOrder(0.25), 1.0);
  CHECK(tail_bound(k, ContourLine(0.25, 30.0)) < 1e-12);
  CHECK(tail_bound(gamma_symbol(), ContourLine(1.0, 40.0)) < 1e-12);
  double prev = HUGE_VAL;
  for (double T : {10.0, 20.0, 40.0}) {
    double b = tail_bound(gamma_symbol(), ContourLine(1.0, T));
    CHECK(b <= prev);
    prev = b;
  }
  MellinSymbol flat;
  flat.evaluate = [](C) { return C(1.0); };
  CHECK(std::isinf(tail_bound(flat, ContourLine(0.5))));
}

TEST_CASE("Euler operator and polynomial multiplication") {
  MellinSymbol k = kernel_symbol(KernelOrder(0.25), 1.0);
  const C s(0.25, 1.7);
  CHECK(std::abs(apply_euler_operator(k, 0)(s) - k(s)) == 0.0);
  MellinSymbol twice = apply_euler_operator(apply_euler_operator(k, 1), 1);
  CHECK(std::abs(twice(s) - apply_euler_operator(k, 2)(s)) <= 1e-15 * std::abs(twice(s)));
  CHECK(std::abs(symbol_multiply(k, [](C) { return C(1.0); })(s) - k(s)) == 0.0);
  CHECK(apply_euler_operator(k, 2).strip_lo == k.strip_lo);
  CHECK_THROWS_AS(apply_euler_operator(k, -1), DomainError);

  // prod_{n<=3} (1 - 4 s^2/n^2) as polynomial and as nested Euler compositions
  MellinSymbol prod = symbol_multiply(k, [](C z) {
    C p = 1.0;
    for (int n = 1; n <= 3; ++n) p *= 1.0 - 4.0 * z * z / double(n * n);
    return p;
  });
  MellinSymbol nested = k;
  for (int n = 1; n <= 3; ++n) {
    MellinSymbol inner = nested;
    MellinSymbol e2 = apply_euler_operator(inner, 2);
    double c = 4.0 / (n * n);
    nested.evaluate = [inner, e2, c](C z) { return inner(z) - c * e2(z); };
  }
  for (C z : {C(0.1, 0.0), C(0.25, 3.0), C(0.4, -7.5)}) {
    CHECK(std::abs(prod(z) - nested(z)) <= 1e-13 * std::abs(prod(z)));
  }
}

TEST_CASE("Euler operator against differences of the kernel") {
  const KernelOrder o(0.25);
  const double x = 2.0, tau = 1.0;
  const ContourLine line = default_mb_line(o);
  double mb = std::cosh(kPi * tau) / std::pow(kPi, 2.5) *
              mb_integral(apply_euler_operator(kernel_symbol(o, tau), 2), line, x).real();
  // (x d/dx)^2 is d^2/du^2 in u = log x
  const double h = 0.01;
  auto g = [&](double u) { return weber_kernel_mb(o, KernelPoint(x * std::exp(u), tau), line); };
  double fd = (-g(2 * h) + 16 * g(h) - 30 * g(0) + 16 * g(-h) - g(-2 * h)) / (12 * h * h);
  CHECK(std::abs(mb - fd) <= 1e-6);
}

TEST_CASE("abscissa independence and realness") {
  const KernelOrder o(0.25);
  MellinSymbol k = kernel_symbol(o, 0.6);
  for (double x : {0.5, 2.0, 5.0}) {
    C a = mb_integral(k, ContourLine(0.2), x);
    C b = mb_integral(k, ContourLine(0.4), x);
    CHECK(std::abs(a - b) <= 1e-9 * std::max(1.0, std::abs(a)));
    CHECK(std::abs(a.imag()) <= 1e-10 * std::abs(a));
  }
}

TEST_CASE("reported error covers a further step halving") {
  const KernelOrder o(0.25);
  MellinSymbol k = kernel_symbol(o, 1.3);
  for (double x : {0.5, 2.0}) {
    MBResult r = mb_integral_ex(k, ContourLine(0.25), x);
    MBResult finer = mb_integral_ex(k, ContourLine(0.25, 40.0, r.step / 2), x);
    CHECK(std::abs(r.value - finer.value) <= r.error_estimate + 1e-15);
    CHECK(r.error_estimate >= 0.0);
  }
}

}  // TEST_SUITE
