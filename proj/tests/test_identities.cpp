#include <set>

#include "test_util.hpp"
#include "weberdex/errors.hpp"
#include "weberdex/identities.hpp"

using namespace weberdex;
using C = ComplexValue;

TEST_SUITE("identities") {

TEST_CASE("gamma cosine pair and its reciprocal") {
  for (auto [s, y] : {std::pair<C, double>{1.0, 0.0}, {0.75, 1.0}, {C(0.3, 0.4), 2.0}}) {
    IdentityReport r = check_gamma_cosine_pair(s, y);
    INFO(r.name << " rel " << r.rel_err);
    CHECK(r.passed);
    CHECK(r.family == "gamma-cosine");
  }
  // s = 1, y = 0: int_0^inf |Gamma(1 + i tau)|^2 = pi/4
  CHECK_CPLX(check_gamma_cosine_pair(1.0, 0.0).rhs, kPi / 4, 0.0, 1e-14);
  IdentityReport r = check_gamma_cosine_reciprocal(C(0.4, 0.2), 0.7);
  CHECK(r.passed);
  CHECK_THROWS_AS(check_gamma_cosine_pair(-0.2, 1.0), StripError);
}

TEST_CASE("sine pair and reciprocal") {
  for (auto [s, t] : {std::pair<C, double>{0.2, 1.0}, {0.35, 0.5}, {C(0.1, 0.2), 1.5}}) {
    IdentityReport r = check_sine_gamma_pair(s, t);
    INFO(r.name << " rel " << r.rel_err);
    CHECK(r.passed);
  }
  for (auto [s, t] : {std::pair<C, double>{0.15, 1.0}, {0.2, 0.5}, {C(0.1, 0.1), 2.0}}) {
    IdentityReport r = check_sine_gamma_reciprocal(s, t);
    INFO(r.name << " rel " << r.rel_err);
    CHECK(r.passed);
    CHECK(r.rel_err < 1e-10);
  }
  CHECK_THROWS_AS(check_sine_gamma_pair(0.6, 1.0), StripError);
  CHECK_THROWS_AS(check_sine_gamma_reciprocal(0.3, 1.0), StripError);
  CHECK_THROWS_AS(check_sine_gamma_reciprocal(0.1, 0.0), DomainError);
}

TEST_CASE("sinh and cosh gamma integrals") {
  for (C s : {C(0.125), C(0.1, 0.2), C(0.2)}) {
    IdentityReport r = check_sinh_gamma_integral(s);
    INFO(r.name << " rel " << r.rel_err);
    CHECK(r.passed);
  }
  for (C s : {C(0.125), C(0.05, 0.1), C(0.2)}) {
    IdentityReport r = check_cosh_gamma_integral(s);
    INFO(r.name << " rel " << r.rel_err);
    CHECK(r.passed);
  }
  CHECK_THROWS_AS(check_sinh_gamma_integral(0.3), StripError);
  CHECK_THROWS_AS(check_cosh_gamma_integral(0.0), StripError);
}

TEST_CASE("cosh integrand is even in tau") {
  for (C s : {C(0.125), C(0.05, 0.1)}) {
    CHECK_REL(cosh_gamma_lhs(s, true), cosh_gamma_lhs(s, false), 1e-10);
  }
}

TEST_CASE("Macdonald function by Mellin-Barnes") {
  IdentityReport r = check_kl_macdonald_mb(0.5, 1.0, ContourLine(0.3), MacdonaldForm::Cosh);
  CHECK(r.passed);
  CHECK(r.family == "macdonald-mb-cosh");
  CHECK(check_kl_macdonald_mb(1.0, 2.0, ContourLine(0.5), MacdonaldForm::Exp).passed);
  CHECK(check_kl_macdonald_mb(2.0, 3.0, ContourLine(2.0), MacdonaldForm::Exp).passed);
  // the same value from either abscissa
  C a = check_kl_macdonald_mb(1.0, 2.0, ContourLine(0.1), MacdonaldForm::Cosh).rhs;
  C b = check_kl_macdonald_mb(1.0, 2.0, ContourLine(0.4), MacdonaldForm::Cosh).rhs;
  CHECK(std::abs(a - b) <= 1e-10 * std::abs(a));
  CHECK_THROWS_AS(check_kl_macdonald_mb(0.5, 1.0, ContourLine(0.6), MacdonaldForm::Cosh), StripError);
  CHECK_THROWS_AS(check_kl_macdonald_mb(0.5, 0.0, ContourLine(0.3), MacdonaldForm::Cosh), DomainError);
}

TEST_CASE("Nicholson-type Laplace identity holds with the opposite sign") {
  for (auto [tau, x] : {std::pair<double, double>{1.0, 2.0}, {0.5, 1.0}, {0.8, 3.0}}) {
    IdentityReport r = check_nicholson_kl(tau, x);
    INFO(r.name << " " << r.note);
    CHECK_FALSE(r.passed);
    CHECK(std::abs(r.lhs + r.rhs) <= 1e-10 * std::abs(r.lhs));
    CHECK(r.note.find("holds") != std::string::npos);
  }
}

TEST_CASE("suite composition and filtering") {
  auto fams = identity_families();
  CHECK(fams.size() == 9);
  auto only = run_identity_suite("sinh-gamma");
  CHECK(only.size() == 3);
  for (const auto& r : only) CHECK(r.family == "sinh-gamma");

  // a family prefix selects its sub-families
  auto mac = run_identity_suite("macdonald-mb");
  CHECK(mac.size() == 6);
  std::set<std::string> seen;
  for (const auto& r : mac) seen.insert(r.family);
  CHECK(seen == std::set<std::string>{"macdonald-mb-cosh", "macdonald-mb-exp"});

  CHECK(run_identity_suite("no-such-family").empty());

  // deterministic order under the thread pool
  auto a = run_identity_suite("gamma-cosine");
  auto b = run_identity_suite("gamma-cosine");
  REQUIRE(a.size() == b.size());
  for (std::size_t k = 0; k < a.size(); ++k) {
    CHECK(a[k].name == b[k].name);
    CHECK(a[k].lhs == b[k].lhs);
  }
}

}  // TEST_SUITE
