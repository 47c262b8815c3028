#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "charboole/errors.hpp"
#include "charboole/eulerfun.hpp"

using namespace charboole;

namespace {
const DirichletCharacter& chi3() { static const auto c = real_primitive_character(3).value(); return c; }
const DirichletCharacter& chi5() { static const auto c = real_primitive_character(5).value(); return c; }
}  // namespace

TEST_CASE("classical polynomials") {
  const auto& b2 = poly_coeffs(PolyKind::bernoulli, 2);
  CHECK(b2.coeffs == std::vector<Rational>{Rational(1, 6), -1, 1});
  const auto& e3 = poly_coeffs(PolyKind::euler, 3);
  CHECK(e3.coeffs == std::vector<Rational>{Rational(1, 4), 0, Rational(-3, 2), 1});
  CHECK(euler_number(2) == -1);
  CHECK(euler_number(4) == 5);
  CHECK(euler_number(6) == -61);
  // E_n(x) + E_n(x+1) = 2x^n
  for (int n = 0; n <= 7; ++n) {
    const auto& e = poly_coeffs(PolyKind::euler, n);
    const Rational x(2, 7);
    CHECK(e(x) + e(x + 1) == 2 * pow(x, n));
  }
}

TEST_CASE("periodic extensions and jump conventions") {
  CHECK(periodic_eval(PolyKind::bernoulli, 1, Rational(3)) == 0);
  CHECK(periodic_eval(PolyKind::bernoulli, 1, Rational(3), Limit::right) == Rational(-1, 2));
  CHECK(periodic_eval(PolyKind::bernoulli, 1, Rational(3), Limit::left) == Rational(1, 2));
  // Ē_0 = ±1 alternating, standard is the right limit
  CHECK(periodic_eval(PolyKind::euler, 0, Rational(1)) == -1);
  CHECK(periodic_eval(PolyKind::euler, 0, Rational(1), Limit::left) == 1);
  CHECK(periodic_eval(PolyKind::euler, 0, Rational(1), Limit::average) == 0);
  CHECK(periodic_eval(PolyKind::euler, 2, Rational(7, 2)) == -poly_coeffs(PolyKind::euler, 2)(Rational(1, 2)));
  CHECK(periodic_eval(PolyKind::euler, 3, 2.25) == doctest::Approx(poly_coeffs(PolyKind::euler, 3)(0.25)));
}

TEST_CASE("character Euler values at zero") {
  CHECK(euler_char_zero_values(chi3(), 6) == std::vector<Rational>{-2, 0, 4, 0, -44, 0, 1204});
  CHECK(euler_char_zero_values(chi5(), 6) == std::vector<Rational>{0, 4, 0, -68, 0, 3484, 0});
  CharPeriodic e0(PolyKind::euler, 0, chi3());
  CHECK(e0.exact(Rational(0)) == -2);
}

TEST_CASE("polynomial form agrees on the unit interval") {
  for (const auto* chi : {&chi3(), &chi5()}) {
    for (int m = 0; m <= 5; ++m) {
      CharPeriodic e(PolyKind::euler, m, *chi);
      for (const Rational& x : {Rational(0), Rational(1, 3), Rational(7, 10)}) {
        CHECK(e.exact(x) == e.polynomial_exact(x));
      }
    }
  }
}

TEST_CASE("antiperiodicity and parity") {
  // Ē_{m,χ}(x + k) = -Ē_{m,χ}(x);  Ē_{m,χ}(-x) = (-1)^{m+1} χ(-1) Ē_{m,χ}(x) away from jumps
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> num(-400, 400);
  for (const auto* chi : {&chi3(), &chi5()}) {
    const long k = chi->modulus();
    for (int m = 0; m <= 5; ++m) {
      CharPeriodic e(PolyKind::euler, m, *chi);
      for (int t = 0; t < 20; ++t) {
        const Rational x(num(rng), 37);
        CHECK(e.exact(x + k) == -e.exact(x));
        if (x.is_integer()) continue;
        const int sgn = (m % 2 == 0 ? -1 : 1) * chi->at_minus_one();
        CHECK(e.exact(-x) == sgn * e.exact(x));
      }
    }
  }
}

TEST_CASE("complex characters: exact and floating values agree") {
  const auto chi = enumerate_characters(5)[1];
  const int d = chi.value_order();
  CHECK(d == 4);
  CharPeriodic e(PolyKind::euler, 2, chi);
  const Rational x(1, 3);
  const Cyclotomic exact = e.cyclotomic(x, d);
  CHECK(exact.str() == "70/9 + 106/9*z4");
  CHECK(std::abs(exact.to_complex() - e.value(x)) < 1e-12);
  CHECK(std::abs(e(1.0 / 3.0) - e.value(x)) < 1e-12);
  CHECK_THROWS_AS(e.exact(x), HypothesisError);
  CharPeriodic b(PolyKind::bernoulli, 3, chi);
  CHECK(std::abs(b.cyclotomic(Rational(2, 5), 8).to_complex() - b.value(Rational(2, 5))) < 1e-12);
}

TEST_CASE("bernoulli character functions") {
  // B̄_{1,χ}(0) for odd χ mod 3: Σ χ̄(j) B̄_1(j/3) = (1/3 - 1/2) - (2/3 - 1/2) = -1/3
  CharPeriodic b1(PolyKind::bernoulli, 1, chi3());
  CHECK(b1.exact(Rational(0)) == Rational(-1, 3));
  // period k
  CharPeriodic b2(PolyKind::bernoulli, 2, chi5());
  CHECK(b2.exact(Rational(7, 4)) == b2.exact(Rational(7, 4) + 5));
}

TEST_CASE("domain checks") {
  CHECK_THROWS(CharPeriodic(PolyKind::bernoulli, 0, chi3()));
  CHECK_THROWS(CharPeriodic(PolyKind::euler, -1, chi3()));
  const auto even_mod = primitive_characters(8).front();
  CHECK_THROWS(CharPeriodic(PolyKind::euler, 2, even_mod));
}
