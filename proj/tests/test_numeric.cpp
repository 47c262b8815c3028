#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "charboole/cyclotomic.hpp"
#include "charboole/errors.hpp"
#include "charboole/numeric.hpp"
#include "charboole/quadrature.hpp"
#include "charboole/rational.hpp"

using namespace charboole;

TEST_CASE("rational arithmetic is exact and canonical") {
  CHECK(Rational::parse("3/6") == Rational(1, 2));
  CHECK(Rational::parse("-4/2").str() == "-2");
  CHECK(Rational(2, -6).str() == "-1/3");
  CHECK(Rational(-7, 2).floor() == -4);
  CHECK(Rational(-7, 2).frac() == Rational(1, 2));
  CHECK(pow(Rational(2, 3), -2) == Rational(9, 4));
  CHECK(binomial(7, 3) == 35);
  CHECK(factorial(6) == 720);
  CHECK_THROWS_AS(Rational(1, 0), DomainError);
  CHECK_THROWS(Rational::parse("1/x"));
}

TEST_CASE("rational conversions") {
  CHECK(Rational::from_double(0.375) == Rational(3, 8));
  CHECK(Rational::from_double(-2.5) == Rational(-5, 2));
  const Rational third(1, 3);
  CHECK(std::fabs(static_cast<double>(third.to_long_double() - 1.0L / 3.0L)) < 1e-19);
}

TEST_CASE("bernoulli numbers") {
  CHECK(bernoulli_number(0) == Rational(1));
  CHECK(bernoulli_number(1) == Rational(-1, 2));
  CHECK(bernoulli_number(2) == Rational(1, 6));
  CHECK(bernoulli_number(3) == Rational(0));
  CHECK(bernoulli_number(4) == Rational(-1, 30));
  CHECK(bernoulli_number(12) == Rational(-691, 2730));
}

TEST_CASE("hurwitz zeta") {
  CHECK(std::abs(hurwitz_zeta(2.0, 1.0) - kPi * kPi / 6.0) < 1e-14);
  CHECK(std::abs(hurwitz_zeta(2.0, 0.5) - kPi * kPi / 2.0) < 1e-13);
  // ζ(0, a) = 1/2 - a
  CHECK(std::abs(hurwitz_zeta(0.0, 0.25) - 0.25) < 1e-14);
  // ζ(-n, a) = -B_{n+1}(a)/(n+1)
  CHECK(std::abs(hurwitz_zeta(-1.0, 0.5) - 1.0 / 24.0) < 1e-15);
  CHECK(std::abs(hurwitz_zeta(-3.0, 0.125) - 0.005342610677083333) < 1e-15);
  CHECK(std::abs(hurwitz_zeta(-4.0, 0.875) + 0.003631591796875) < 1e-15);
  CHECK(std::abs(hurwitz_zeta(Complex(-2.5, 1.0), 3.5) - hurwitz_zeta(Complex(-2.5, 1.0), 2.5) +
                 std::pow(Complex(2.5), Complex(2.5, -1.0))) < 1e-12);
  // shift identity
  const Complex s{3.0, 1.0};
  const Complex lhs = hurwitz_zeta(s, 0.3);
  const Complex rhs = std::pow(Complex(0.3), -s) + hurwitz_zeta(s, 1.3);
  CHECK(std::abs(lhs - rhs) < 1e-12);
  CHECK_THROWS_AS(hurwitz_zeta(1.0, 0.5), PoleError);
}

TEST_CASE("gamma family") {
  CHECK(std::fabs(log_gamma(0.5) - 0.5 * std::log(kPi)) < 1e-14);
  CHECK(std::fabs(log_gamma(10.0) - std::log(362880.0)) < 1e-12);
  CHECK(std::fabs(polygamma(0, 1.0) + kEulerGamma) < 1e-14);
  CHECK(std::fabs(polygamma(1, 1.0) - kPi * kPi / 6.0) < 1e-13);
  CHECK(std::fabs(polygamma(3, 0.3) - 743.14176465505) < 1e-9);
  CHECK_THROWS_AS(polygamma(0, -1.0), DomainError);
}

TEST_CASE("piecewise quadrature") {
  auto sq = integrate_piecewise([](double x) { return x * x; }, QuadratureSpec{});
  CHECK(std::fabs(sq.value - 1.0 / 3.0) < 1e-15);

  auto spec = QuadratureSpec::with_lattice_breaks(0.0, 3.0, 2);
  CHECK(spec.breakpoints == std::vector<double>{0.5, 1.0, 1.5, 2.0, 2.5});
  auto kink = integrate_piecewise([](double x) { return std::fabs(x - 1.5); }, spec);
  CHECK(std::fabs(kink.value - 2.25) < 1e-14);

  auto cz = integrate_piecewise([](double x) { return std::exp(Complex(0.0, x)); },
                                QuadratureSpec{0.0, kPi, {}});
  CHECK(std::abs(cz.value - Complex(0.0, 2.0)) < 1e-14);

  QuadratureSpec bad{1.0, 0.0, {}};
  CHECK_THROWS_AS(bad.validate(), DomainError);
  QuadratureSpec shallow{0.0, 1.0, {}};
  shallow.max_depth = 2;
  CHECK_THROWS_AS(integrate_piecewise([](double x) { return 1.0 / std::sqrt(x); }, shallow), ConvergenceError);
}

TEST_CASE("cyclotomic polynomials") {
  auto as_ints = [](int d) {
    std::vector<long> v;
    for (const auto& c : cyclotomic_polynomial(d)) v.push_back(c.numerator().get_si());
    return v;
  };
  CHECK(as_ints(1) == std::vector<long>{-1, 1});
  CHECK(as_ints(2) == std::vector<long>{1, 1});
  CHECK(as_ints(4) == std::vector<long>{1, 0, 1});
  CHECK(as_ints(6) == std::vector<long>{1, -1, 1});
  CHECK(as_ints(9) == std::vector<long>{1, 0, 0, 1, 0, 0, 1});
  CHECK(as_ints(12) == std::vector<long>{1, 0, -1, 0, 1});
}

TEST_CASE("cyclotomic field arithmetic") {
  const auto i = Cyclotomic::root(4, 1);
  CHECK((i * i + Cyclotomic(4, Rational(1))).is_zero());
  const auto w = Cyclotomic::root(3, 1);
  CHECK((Cyclotomic(3, Rational(1)) + w + w * w).is_zero());
  CHECK(!(w - Cyclotomic(3, Rational(1))).is_zero());
  CHECK((w.conj() - w * w).is_zero());
  const auto z6 = Cyclotomic::root(6, 1);
  CHECK(std::abs(z6.to_complex() - std::polar(1.0, kPi / 3.0)) < 1e-15);
  // ζ_6 = 1 + ζ_6^2 reduces the same way both sides
  CHECK((z6 - Cyclotomic(6, Rational(1)) - Cyclotomic::root(6, 2)).is_zero());
  CHECK(Cyclotomic::root(4, -1).str() == "-z4");
  CHECK_THROWS_AS(Cyclotomic::root(4, 1) + Cyclotomic::root(3, 1), DomainError);
}
