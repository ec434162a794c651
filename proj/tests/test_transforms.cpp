#include <map>

#include "test_util.hpp"
#include "weberdex/errors.hpp"
#include "weberdex/kernel_series.hpp"
#include "weberdex/transforms.hpp"

using namespace weberdex;
using C = ComplexValue;

namespace {

const SampledFunction& f_exp() {
  static const SampledFunction f = SampledFunction::callable([](double x) { return std::exp(-x); });
  return f;
}

const SampledFunction& g_fixture() {
  static const SampledFunction g =
      SampledFunction::callable([](double t) { return t * t * std::exp(-t * t); }, DomainKind::RealLine);
  return g;
}

const MellinFn gamma_star = [](C s) { return gamma_fn(s); };

const TransformTable& table_f(double alpha) {
  static std::map<double, TransformTable> cache;
  auto it = cache.find(alpha);
  if (it == cache.end()) {
    it = cache.emplace(alpha, tabulate_forward_f(KernelOrder(alpha), f_exp(), uniform_grid(0.0, 8.0, 0.05))).first;
  }
  return it->second;
}

}  // namespace

TEST_SUITE("transforms") {

TEST_CASE("grids, tables and sampled functions") {
  auto g = uniform_grid(0.0, 8.0, 0.05);
  CHECK(g.size() == 161);
  CHECK(g.back() == 8.0);
  std::vector<double> sq(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) sq[i] = g[i] * g[i];
  CHECK_CLOSE(table_integral(g, sq), 512.0 / 3.0, 1e-12);

  TransformTable t{g, sq, TableKind::F};
  t.validate();
  CHECK(t.at(-1.5) == doctest::Approx(2.25).epsilon(1e-6));
  CHECK(t.at(9.0) == 0.0);
  TransformTable bad{{0.0, 1.0, 0.5}, {1, 2, 3}, TableKind::F};
  CHECK_THROWS_AS(bad.validate(), DomainError);

  auto s = SampledFunction::samples(g, sq);
  CHECK(s(2.025) == doctest::Approx(2.025 * 2.025).epsilon(1e-10));
  CHECK(s(9.0) == 0.0);
  CHECK_THROWS_AS(SampledFunction::samples({0.0, 1.0}, {1.0}), DomainError);

  CHECK(g_fixture().parity() == 1);
  auto odd = SampledFunction::callable([](double t) { return t * std::exp(-t * t); }, DomainKind::RealLine);
  CHECK(odd.parity() == -1);
  CHECK(f_exp().parity() == 0);

  f_exp().check_decay();
  auto slow = SampledFunction::callable([](double x) { return 1.0 / (1.0 + x); }, DomainKind::HalfLine, 0.0, 3.0);
  CHECK_THROWS_AS(slow.check_decay(), DomainError);
}

TEST_CASE("Mellin transform machinery") {
  for (C s : {C(0.5, 0.0), C(1.3, 2.0), C(0.2, -1.0)}) {
    C m = mellin_transform(f_exp(), s);
    C want = gamma_fn(s);
    CHECK(std::abs(m - want) <= 1e-10 * std::abs(want));
  }
  CHECK_CLOSE(mellin_inverse(gamma_star, ContourLine(1.0), 0.7).real(), std::exp(-0.7), 1e-11);
  MellinLineTable tab([](C s) { return gamma_fn(s); }, 1.0, 0.125);
  CHECK_CLOSE(tab(1.5), std::exp(-1.5), 1e-11);
  CHECK_CLOSE(tab(0.2), std::exp(-0.2), 1e-11);
}

TEST_CASE("forward F against the oracle") {
  // mpmath quad of W * e^{-x}
  const KernelOrder o(0.5);
  const double taus[] = {0.0, 0.3, 0.7, 1.0, 2.0};
  const double want[] = {0.31177872489857333, 0.2624828039044311, 0.14543850831044408, 0.08893406058522432,
                         0.02825150693715266};
  for (int i = 0; i < 5; ++i) CHECK_CLOSE(forward_f(o, f_exp(), taus[i]), want[i], 1e-10);
  CHECK_CLOSE(forward_f(KernelOrder(0.0), f_exp(), 1.0), 0.25468917555504483, 1e-10);
  CHECK(forward_f(o, SampledFunction::zero(), 1.0) == 0.0);
  CHECK(forward_f(o, f_exp(), -0.7) == doctest::Approx(forward_f(o, f_exp(), 0.7)).epsilon(1e-13));
}

TEST_CASE("forward F by its other representations") {
  const KernelOrder o(0.5);
  const ContourLine line(0.25);
  for (double tau : {0.3, 1.0, 2.0}) {
    double d = forward_f(o, f_exp(), tau);
    CHECK_CLOSE(forward_f_mellin(o, gamma_star, tau, line), d, 1e-10);
    CHECK_CLOSE(forward_f_kl(o, gamma_star, tau, ContourLine(0.5)), d, 1e-6);
    CHECK_CLOSE(forward_f_phi(o, gamma_star, tau, ContourLine(0.5)), d, 1e-5);
  }
  CHECK_CLOSE(psi_alpha(o, gamma_star, 1.0, ContourLine(0.5)), 0.3559793298891319, 1e-11);
  CHECK_CLOSE(phi_alpha(o, gamma_star, 1.0, ContourLine(0.5)), 0.30748680865318806, 1e-11);
  // alpha = 0: the gamma ratio is 1 and psi is the inverse Mellin of Gamma(1-s) Gamma(s)
  CHECK_CLOSE(psi_alpha(KernelOrder(0.0), gamma_star, 1.0, ContourLine(0.5)), 0.5, 1e-11);
  CHECK_THROWS_AS(psi_alpha(o, gamma_star, 1.0, ContourLine(1.6)), StripError);
  CHECK_THROWS_AS(forward_f_mellin(o, gamma_star, 1.0, ContourLine(0.6)), StripError);
}

TEST_CASE("forward G") {
  const KernelOrder o(0.5);
  CHECK_CLOSE(forward_g(o, g_fixture(), 1.0), 0.09202948419574418, 1e-11);
  CHECK_CLOSE(forward_g(o, g_fixture(), 3.0), 0.08129868257267214, 1e-11);
  auto odd = SampledFunction::callable([](double t) { return t * std::exp(-t * t); }, DomainKind::RealLine);
  CHECK(forward_g(o, odd, 1.0) == 0.0);
  auto wild = SampledFunction::callable([](double) { return 1.0; }, DomainKind::RealLine);
  CHECK_THROWS_AS(GTransform(o, wild), TailError);
}

TEST_CASE("Mellin transform of G") {
  for (double a : {0.25, 0.5}) {
    for (double t : {0.0, 1.0}) {
      IdentityReport r = forward_g_mellin_check(KernelOrder(a), g_fixture(), ContourLine(0.25), {}, t);
      INFO("alpha=" << a << " t=" << t << " rel " << r.rel_err);
      CHECK(r.passed);
    }
  }
  CHECK_THROWS_AS(forward_g_mellin_check(KernelOrder(0.5), g_fixture(), ContourLine(0.6)), StripError);
}

TEST_CASE("F inversion: operator paths and hypotheses") {
  const KernelOrder o(0.5);
  const TransformTable& Ff = table_f(0.5);
  double mb = invert_f(o, Ff, 1.0, ContourLine(0.25));
  double fd = invert_f_fd(o, Ff, 1.0);
  CHECK(std::abs(mb - fd) <= 1e-4 * std::abs(mb));
  TransformTable zero{Ff.grid, std::vector<double>(Ff.grid.size(), 0.0), TableKind::F};
  CHECK(invert_f(o, zero, 1.0, ContourLine(0.25)) == 0.0);
  CHECK_THROWS_AS(invert_f(KernelOrder(-0.1), Ff, 1.0, ContourLine(0.25)), ConstraintError);
  CHECK_THROWS_AS(invert_f(KernelOrder(0.0), Ff, 1.0, ContourLine(0.25)), ConstraintError);
  // the operator kernel: Mellin symbol against the termwise series
  for (double tau : {0.5, 1.3, 3.0}) {
    double series = KernelSeries(0.5, tau).eval(1.0, op_inversion(0.5)).re;
    CHECK_CLOSE(inversion_kernel(0.5, tau, 1.0), series, 1e-14);
  }
}

TEST_CASE("truncated product inversion") {
  const KernelOrder o(0.5);
  const TransformTable& Ff = table_f(0.5);
  const ContourLine line(0.25);
  double prev_err = HUGE_VAL;
  for (int N = 0; N <= 3; ++N) {
    CHECK_CLOSE(product_kernel_mb(o, 1.0, 1.3, N, line), product_kernel_series(o, 1.0, 1.3, N), 1e-10);
    // e^{-x} makes x f_N(x) the inverse Mellin of Gamma(1+s) P_N(s) 2 pi s / sin(2 pi s)
    MellinSymbol m;
    m.strip_lo = -0.5;
    m.strip_hi = 0.5;
    m.evaluate = [N](C s) {
      C p = 1.0;
      for (int n = 1; n <= N; ++n) p *= 1.0 - 4.0 * s * s / double(n * n);
      return gamma_fn(1.0 + s) * p * 2.0 * kPi * s / std::sin(2.0 * kPi * s);
    };
    double want = mb_integral(m, line, 1.0).real();
    double got = invert_f_product(o, Ff, 1.0, N, line);
    CHECK_REL(got, want, 5e-3);
    double err = std::abs(got - std::exp(-1.0));
    CHECK(err < prev_err);
    prev_err = err;
  }
  CHECK_THROWS_AS(invert_f_product(o, Ff, 1.0, 6, line), DomainError);
  TransformTable zero{Ff.grid, std::vector<double>(Ff.grid.size(), 0.0), TableKind::F};
  CHECK(invert_f_product(o, zero, 1.0, 2, line) == 0.0);
}

TEST_CASE("G inversion round trip") {
  const KernelOrder o(0.5);
  GTransform G(o, g_fixture());
  auto Gg = SampledFunction::callable([&G](double x) { return G(x); });
  InvertGDiagnostics d = invert_g_ex(o, Gg, 1.0);
  CHECK_REL(d.value, std::exp(-1.0), 1e-2);
  CHECK(d.boundary_lo <= 1e-6);
  CHECK(d.boundary_hi <= 1e-6);
  CHECK(invert_g(o, Gg, 0.0) == 0.0);
  auto coarse = SampledFunction::samples(uniform_grid(0.5, 40.0, 0.5), std::vector<double>(80, 0.01));
  CHECK_THROWS_AS(invert_g(o, coarse, 1.0), DerivativeError);
}

TEST_CASE("Nicholson specialization") {
  CHECK_CLOSE(nicholson_forward(f_exp(), 1.0), forward_f(KernelOrder(0.0), f_exp(), 1.0), 1e-7);
  CHECK(nicholson_forward(SampledFunction::zero(), 1.0) == 0.0);
  TransformTable zero{uniform_grid(0.0, 8.0, 0.05), std::vector<double>(161, 0.0), TableKind::F};
  CHECK(nicholson_invert(zero, 1.0) == 0.0);
  for (double tau : {0.3, 1.0, 2.5}) {
    for (double t : {0.1, 1.0, 5.0, 20.0}) CHECK(std::abs(im_j_squared(tau, t)) <= std::cosh(kPi * tau));
  }
}

TEST_CASE("norms and bounds") {
  CHECK_CLOSE(lnorm(f_exp(), 0.2), std::tgamma(0.8), 1e-12);
  // int tau^4 e^{-2 tau^2} over the line = 3 sqrt(pi) / (4 * 2^{5/2})
  CHECK_CLOSE(l2norm(g_fixture()), std::sqrt(3.0 * std::sqrt(kPi) / (4.0 * std::pow(2.0, 2.5))), 1e-12);
  CHECK_THROWS_AS(theorem4_constant(KernelOrder(0.5), 0.3), StripError);

  const KernelOrder o(0.5);
  const double gamma = 0.2;
  // sup |F f| / cosh <= C_gamma ||f||
  const TransformTable& Ff = table_f(0.5);
  double cf = bound_constant(o, gamma) * lnorm(f_exp(), gamma);
  for (std::size_t i = 0; i < Ff.grid.size(); i += 10) CHECK(std::abs(Ff.values[i]) / std::cosh(kPi * Ff.grid[i]) < cf);
  // x^gamma |G g| <= C ||g||_2
  double cg = theorem4_constant(o, gamma) * l2norm(g_fixture());
  CHECK(cg > 0.0);
  GTransform G(o, g_fixture());
  for (double x : {0.01, 0.1, 1.0, 10.0, 100.0}) CHECK(std::pow(x, gamma) * std::abs(G(x)) < cg);
}

}  // TEST_SUITE
