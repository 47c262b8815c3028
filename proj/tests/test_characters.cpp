#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numeric>

#include "charboole/characters.hpp"
#include "charboole/errors.hpp"

using namespace charboole;

TEST_CASE("group structure") {
  CHECK(euler_phi(1) == 1);
  CHECK(euler_phi(9) == 6);
  CHECK(euler_phi(24) == 8);
  const auto g8 = generators(8);
  REQUIRE(g8.size() == 2);
  CHECK(g8[0].generator == 7);  // -1 mod 8
  CHECK(g8[1].generator == 5);
  const auto g9 = generators(9);
  REQUIRE(g9.size() == 1);
  CHECK(g9[0].generator == 2);
  CHECK(g9[0].order == 6);
}

TEST_CASE("character counts and primitivity") {
  struct Row { long k; std::size_t all, primitive; };
  for (const Row r : {Row{3, 2, 1}, Row{5, 4, 3}, Row{9, 6, 4}, Row{8, 4, 2}, Row{24, 8, 2}}) {
    CAPTURE(r.k);
    CHECK(enumerate_characters(r.k).size() == r.all);
    CHECK(primitive_characters(r.k).size() == r.primitive);
  }
}

TEST_CASE("quadratic characters") {
  const auto chi3 = real_primitive_character(3).value();
  CHECK(chi3.sign(1) == 1);
  CHECK(chi3.sign(2) == -1);
  CHECK(chi3.sign(3) == 0);
  CHECK(chi3.parity() == Parity::odd);
  CHECK(chi3.index() == std::vector<long>{1});

  const auto chi5 = real_primitive_character(5).value();
  CHECK(chi5.is_even());
  CHECK(chi5.index() == std::vector<long>{2});
  for (long n : {1, 4, 6, 9}) CHECK(chi5.sign(n) == 1);
  for (long n : {2, 3, -2}) CHECK(chi5.sign(n) == -1);
  CHECK(!real_primitive_character(9).has_value());
}

TEST_CASE("characters are multiplicative, periodic and orthogonal") {
  for (long k : {5L, 8L, 9L, 12L}) {
    CAPTURE(k);
    const auto chars = enumerate_characters(k);
    for (const auto& chi : chars) {
      CAPTURE(chi.label());
      for (long m = 0; m < k; ++m)
        for (long n = 0; n < k; ++n) CHECK(chi(m * n) == chi(m) * chi(n));
      CHECK(chi(-3) == chi(k - 3));
      CHECK(chi(1) == CharacterValue::one());
      CHECK(chi.at_minus_one() * 1.0 == doctest::Approx(chi.complex(-1).real()));
    }
    for (std::size_t a = 0; a < chars.size(); ++a) {
      for (std::size_t b = 0; b < chars.size(); ++b) {
        Complex s = 0.0;
        for (long n = 0; n < k; ++n) s += chars[a].complex(n) * std::conj(chars[b].complex(n));
        const double expect = a == b ? static_cast<double>(euler_phi(k)) : 0.0;
        CHECK(std::abs(s - expect) < 1e-12);
      }
    }
  }
}

TEST_CASE("conductor and conjugation") {
  const auto chars = enumerate_characters(9);
  CHECK(chars[0].is_principal());
  CHECK(conductor(chars[3]) == 3);  // cube of the generator character
  for (const auto& chi : chars) {
    const auto cc = chi.conjugate();
    for (long n = 0; n < 9; ++n) CHECK(cc(n) == chi(n).conj());
    CHECK(cc.conjugate() == chi);
  }
  CHECK(chars[1].value_order() == 6);
}

TEST_CASE("character values") {
  const auto v = CharacterValue::root(Rational(5, 4));
  CHECK(v.exponent() == Rational(1, 4));
  CHECK(v.str() == "1/4");
  CHECK(!v.is_real());
  CHECK_THROWS_AS(v.to_rational(), DomainError);
  CHECK(CharacterValue::root(Rational(1, 2)).to_rational() == Rational(-1));
  CHECK((v.to_cyclotomic(8) - Cyclotomic::root(8, 2)).is_zero());
  CHECK_THROWS_AS(v.to_cyclotomic(6), DomainError);
  CHECK(CharacterValue::zero().str() == "0");
}

TEST_CASE("json rendering") {
  const auto chi = enumerate_characters(5)[1];
  const std::string j = character_json(chi);
  CHECK(j.find(R"("modulus":5,"conductor":5,"parity":"odd")") != std::string::npos);
  CHECK(j.find(R"("values":[null,"0","1/4","3/4","1/2"])") != std::string::npos);
}

TEST_CASE("invalid construction") {
  CHECK_THROWS(DirichletCharacter(0, {}));
  CHECK_THROWS(DirichletCharacter(5, {1, 2}));
  CHECK_THROWS_AS(enumerate_characters(5)[1].sign(2), DomainError);
}
