#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "charboole/errors.hpp"
#include "charboole/lfunc.hpp"

using namespace charboole;

namespace {
const DirichletCharacter& chi3() { static const auto c = real_primitive_character(3).value(); return c; }
const DirichletCharacter& chi5() { static const auto c = real_primitive_character(5).value(); return c; }

Complex route(LMethod m, Complex s, double a, const DirichletCharacter& chi) {
  LQuery q{s, a, chi, m};
  return ell(q);
}
}  // namespace

TEST_CASE("reference values") {
  CHECK(std::abs(route(LMethod::hurwitz, 1.0, 0.0, chi3()) - (-2.0 * std::sqrt(3.0) * kPi / 9.0)) < 1e-13);
  CHECK(std::abs(route(LMethod::hurwitz, 2.0, 1.0, chi5()) - (-0.247365336925864)) < 1e-13);
  CHECK(std::abs(route(LMethod::hurwitz, 0.5, 0.25, chi3()) - (-1.03299642846028)) < 1e-13);
  CHECK(std::abs(ell_prime0(chi3()) - (-0.486100706299316)) < 1e-13);
  CHECK(std::abs(ell_prime0(chi5()) - (-1.44363547517881)) < 1e-13);
  CHECK(gamma_star({0.5, chi3()}) == doctest::Approx(0.492202905289196).epsilon(1e-13));
  CHECK(gamma_star({0.5, chi5()}) == doctest::Approx(0.330736734524703).epsilon(1e-13));
  CHECK(std::abs(psi_star(0.3, chi3()) - 0.934954563028233) < 1e-13);
  CHECK(std::abs(psi_star(0.5, chi5()) - 0.510550723761605) < 1e-13);
}

TEST_CASE("routes agree") {
  for (const auto* chi : {&chi3(), &chi5()}) {
    for (Complex s : {Complex(2.0), Complex(0.5), Complex(1.5, 2.0)}) {
      for (double a : {0.25, 1.5}) {
        CAPTURE(chi->label());
        CAPTURE(a);
        const Complex h = route(LMethod::hurwitz, s, a, *chi);
        CHECK(std::abs(route(LMethod::series, s, a, *chi) - h) < 1e-9);
        CHECK(std::abs(route(LMethod::integral, s, a, *chi) - h) < 1e-9);
      }
    }
    // continuation to Re s < 0
    const Complex h = route(LMethod::hurwitz, -0.5, 0.5, *chi);
    CHECK(std::abs(route(LMethod::integral, -0.5, 0.5, *chi) - h) < 1e-9);
  }
}

TEST_CASE("values at non-positive integers") {
  const std::vector<Rational> e3 = {-1, Rational(-1, 4), Rational(31, 16), Rational(95, 64)};
  const std::vector<Rational> e5 = {0, 2, 1, Rational(-269, 8)};
  for (int p = 1; p <= 4; ++p) {
    const auto v3 = ell_special_negint(p, Rational(1, 4), chi3());
    const auto v5 = ell_special_negint(p, Rational(1, 4), chi5());
    REQUIRE(v3.exact.has_value());
    CHECK(*v3.exact == e3[p - 1]);
    CHECK(*v5.exact == e5[p - 1]);
    CHECK(std::abs(route(LMethod::hurwitz, 1.0 - p, 0.25, chi3()) - v3.value) < 1e-12);
    CHECK(std::abs(route(LMethod::integral, 1.0 - p, 0.25, chi5()) - v5.value) < 1e-9);
  }
  const auto chi = enumerate_characters(5)[1];
  const auto v = ell_special_negint(2, Rational(1, 3), chi);
  CHECK(std::abs(route(LMethod::hurwitz, -1.0, 1.0 / 3.0, chi) - v.value) < 1e-10);
}

TEST_CASE("partial sums") {
  for (double x : {7.5, 12.0, 30.2}) {
    const Complex lit = ell_partial_literal(x, 1.5, 0.5, chi3());
    CHECK(std::abs(ell_partial(x, 1.5, 0.5, chi3(), 3) - lit) < 1e-9 * std::max(1.0, std::abs(lit)));
  }
}

TEST_CASE("derivative at zero, log gamma star and psi star") {
  for (const auto* chi : {&chi3(), &chi5()}) {
    CHECK(std::abs(ell_prime0_integral(*chi) - ell_prime0(*chi)) < 1e-9);
    const auto d = ell_derivative0(0.5, *chi);
    CHECK(std::abs(d.gamma_sum - d.integral) < 1e-9);
    // log Γ* is the a-independent part: -ℓ'(0,a) + ℓ'(0) by the product
    for (double a : {0.25, 1.5}) {
      const double q = gamma_star({a, *chi, GammaRoute::quotient});
      CHECK(gamma_star({a, *chi, GammaRoute::log_formula}) == doctest::Approx(q).epsilon(1e-10));
      // ψ* = d/da log Γ*
      const double h = 1e-5;
      const double fd = (gamma_star({a + h, *chi}) - gamma_star({a - h, *chi})) / (2 * h);
      CHECK(psi_star(a, *chi).real() == doctest::Approx(fd).epsilon(1e-7));
      // ψ* = -ℓ(1, a)
      CHECK(std::abs(psi_star(a, *chi) + route(LMethod::hurwitz, 1.0, a, *chi)) < 1e-12);
    }
    CHECK(gamma_star({0.0, *chi}) == doctest::Approx(0.0));
  }
}

TEST_CASE("cotangent closed forms") {
  CHECK(cot_derivative(0, 0.3) == doctest::Approx(1.0 / std::tan(0.3)));
  CHECK(cot_derivative(1, 0.3) == doctest::Approx(-1.0 / std::pow(std::sin(0.3), 2)));
  CHECK(std::abs(ell_cot(1, chi3()) - route(LMethod::hurwitz, 1.0, 0.0, chi3())) < 1e-12);
  CHECK(std::abs(ell_cot(3, chi3()) - route(LMethod::hurwitz, 3.0, 0.0, chi3())) < 1e-12);
  CHECK(std::abs(ell_cot(2, chi5()) - route(LMethod::hurwitz, 2.0, 0.0, chi5())) < 1e-12);
  CHECK_THROWS_AS(ell_cot(2, chi3()), HypothesisError);
}

TEST_CASE("generating function coefficients") {
  for (const auto* chi : {&chi3(), &chi5()}) {
    for (GfKernel k : {GfKernel::exp, GfKernel::cos, GfKernel::sin, GfKernel::cosh, GfKernel::sinh}) {
      const auto g = gf_coefficients(k, *chi, 8);
      for (std::size_t j = 0; j < g.coefficients.size(); ++j)
        CHECK(std::abs(g.coefficients[j] - g.expected[j]) < 1e-10);
    }
  }
  CHECK_THROWS_AS(gf_coefficients(GfKernel::cos, chi3(), 4, Parity::even), HypothesisError);
}

TEST_CASE("asymptotic expansions improve with the argument") {
  const auto s1 = stirling_log_gamma_star(10.0, chi3(), 6);
  const auto s2 = stirling_log_gamma_star(20.0, chi3(), 6);
  const double d1 = std::fabs(s1.partial - gamma_star({10.0, chi3()}));
  const double d2 = std::fabs(s2.partial - gamma_star({20.0, chi3()}));
  CHECK(d1 <= s1.error_proxy);
  CHECK(d1 / d2 >= 10.0);
  const auto m1 = log_mean_defect(30.5, chi5(), 4);
  const auto m2 = log_mean_defect(60.5, chi5(), 4);
  CHECK(m1.defect / m2.defect >= 10.0);
}

TEST_CASE("domain and hypothesis errors") {
  CHECK_THROWS_AS(route(LMethod::series, -1.0, 0.5, chi3()), DomainError);
  CHECK_THROWS_AS(route(LMethod::integral, 2.0, 0.0, chi3()), DomainError);
  CHECK_THROWS_AS(route(LMethod::hurwitz, 2.0, 0.0, primitive_characters(8).front()), HypothesisError);
  CHECK_THROWS_AS(ell_special_negint(0, Rational(1, 2), chi3()), DomainError);
  CHECK_THROWS_AS(gamma_star({0.5, enumerate_characters(5)[1]}), HypothesisError);
  CHECK_THROWS_AS(psi_star(0.0, chi3()), DomainError);
}
