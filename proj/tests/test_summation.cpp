#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "charboole/errors.hpp"
#include "charboole/summation.hpp"

using namespace charboole;

namespace {
const DirichletCharacter& chi3() { static const auto c = real_primitive_character(3).value(); return c; }
const DirichletCharacter& chi5() { static const auto c = real_primitive_character(5).value(); return c; }

double rel(const SummationReport& r) { return std::abs(r.defect) / std::max(1.0, std::abs(r.lhs)); }
}  // namespace

TEST_CASE("smooth function helpers") {
  const auto e = SmoothFunction::exponential(0.5);
  CHECK(e.derivative(3, 1.0) == doctest::Approx(0.125 * std::exp(0.5)));
  const auto m = SmoothFunction::monomial(3);
  CHECK(m.derivative(1, 2.0) == doctest::Approx(12.0));
  CHECK(m.derivative(4, 2.0) == 0.0);
  const auto r = SmoothFunction::reciprocal(2.0);
  CHECK(r.derivative(2, 0.0) == doctest::Approx(0.25));
  CHECK_THROWS_AS(e.derivative(13, 0.0), DomainError);
  // mislabelled derivative is caught
  CHECK_THROWS_AS(SmoothFunction("bad", {[](double x) { return x * x; }, [](double x) { return x; }}, {1.0}),
                  DomainError);
}

TEST_CASE("classical Boole formula") {
  // exact on polynomials once l exceeds the degree
  const auto x3 = SmoothFunction::monomial(3);
  const auto r = boole_sum(x3, 0, 6, 4);
  CHECK(r.lhs.real() == doctest::Approx(2.0 * (0 - 1 + 8 - 27 + 64 - 125)));
  CHECK(std::abs(r.defect) < 1e-11);
  for (int l = 1; l <= 4; ++l) {
    CAPTURE(l);
    CHECK(rel(boole_sum(SmoothFunction::exponential(0.1), 1, 11, l)) < 1e-12);
    CHECK(rel(boole_sum(SmoothFunction::reciprocal(2.0), 0, 20, l)) < 1e-12);
  }
  CHECK_THROWS_AS(boole_sum(x3, 3, 3, 0), DomainError);
}

TEST_CASE("character Boole formula, all orders agree") {
  for (const auto* chi : {&chi3(), &chi5()}) {
    const long k = chi->modulus();
    for (const auto& f : {SmoothFunction::exponential(0.1), SmoothFunction::monomial(4),
                          SmoothFunction::reciprocal(2.0)}) {
      Complex first{};
      for (int l = 1; l <= 4; ++l) {
        CAPTURE(chi->label());
        CAPTURE(f.name());
        CAPTURE(l);
        const auto r = char_boole_sum(*chi, f, 0.0, 4.0 * k, l);
        CHECK(rel(r) < 1e-10);
        if (l == 1) first = r.lhs;
        CHECK(std::abs(r.lhs - first) < 1e-12);
      }
    }
  }
}

TEST_CASE("character Boole formula, non-integer endpoints and lhs value") {
  // 2 Σ_{0<n<6} (-1)^n χ3(n) n = 2(-1 - 2 + 0 + 4 + 5... )
  const auto id = SmoothFunction::monomial(1);
  const auto r = char_boole_sum(chi3(), id, 0.0, 6.0, 2);
  double expect = 0.0;
  for (int n = 1; n < 6; ++n) expect += 2.0 * ((n % 2) ? -1 : 1) * chi3().sign(n) * n;
  CHECK(r.lhs.real() == doctest::Approx(expect));
  CHECK(std::abs(r.defect) < 1e-12);
  CHECK(rel(char_boole_sum(chi5(), SmoothFunction::exponential(0.1), 0.5, 10.5, 3)) < 1e-10);
}

TEST_CASE("complex character") {
  const auto chi = enumerate_characters(5)[1];
  for (int l = 1; l <= 3; ++l) {
    const auto r = char_boole_sum(chi, SmoothFunction::exponential(0.2), 0.0, 10.0, l);
    CHECK(rel(r) < 1e-10);
    CHECK(std::abs(r.lhs.imag()) > 1e-3);
  }
}

TEST_CASE("character Euler-Maclaurin formula") {
  for (const auto* chi : {&chi3(), &chi5()}) {
    for (int l = 1; l <= 4; ++l) {
      CHECK(rel(char_euler_maclaurin(*chi, SmoothFunction::exponential(0.1), 0.0, 2.0 * chi->modulus(), l)) <
            1e-10);
    }
  }
}

TEST_CASE("hypotheses") {
  const auto f = SmoothFunction::exponential(0.1);
  CHECK_THROWS_AS(char_boole_sum(primitive_characters(8).front(), f, 0.0, 8.0, 2), HypothesisError);
  CHECK_THROWS_AS(char_boole_sum(enumerate_characters(9)[3], f, 0.0, 9.0, 2), HypothesisError);
  CHECK_THROWS_AS(char_boole_sum(chi3(), SmoothFunction::exponential(0.1, 2), 0.0, 9.0, 4), DomainError);
}
