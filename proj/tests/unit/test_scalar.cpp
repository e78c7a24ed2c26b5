#include <doctest.h>

#include <random>
#include <stdexcept>

#include "kanrep/scalar.hpp"

using kanrep::FieldContext;
using kanrep::Scalar;

TEST_CASE("rational arithmetic is exact") {
  const FieldContext q = FieldContext::rational();
  CHECK(q.from_fraction(1, 2) + q.from_fraction(1, 3) == q.from_fraction(5, 6));
  CHECK(q.from_fraction(-3, 4) * q.from_fraction(8, 9) == q.from_fraction(-2, 3));
  CHECK(q.from_fraction(2, 4) == q.from_fraction(1, 2));
  CHECK(q.from_fraction(1, 2).to_string() == "1/2");
  CHECK((q.from_fraction(5, 7) / q.from_fraction(5, 7)).is_one());
}

TEST_CASE("prime field arithmetic wraps") {
  const FieldContext f3 = FieldContext::prime(3);
  CHECK(f3.from_int(2) + f3.from_int(2) == f3.from_int(1));
  CHECK(f3.from_int(-1) == f3.from_int(2));
  const FieldContext f7 = FieldContext::prime(7);
  CHECK(f7.from_int(3) * f7.from_int(5) == f7.one());
  CHECK(f7.from_fraction(1, 2) == f7.from_int(4));
  for (int a = 1; a < 7; ++a) CHECK((f7.from_int(a) * f7.from_int(a).inverse()).is_one());
}

TEST_CASE("formal parameter multiplies as a polynomial") {
  const FieldContext qa = FieldContext::rational(true);
  const Scalar al = qa.alpha();
  const Scalar product = (al - qa.one()) * (al + qa.one());
  CHECK(product == al * al - qa.one());
  CHECK(product.degree() == 2);
  CHECK(qa.parse_scalar("-1 + al^2") == product);
  CHECK_THROWS_AS(al.inverse(), std::domain_error);
}

TEST_CASE("division by zero raises") {
  const FieldContext q = FieldContext::rational();
  CHECK_THROWS_AS(q.one() / q.zero(), std::domain_error);
  CHECK_THROWS_AS(q.from_fraction(1, 0), std::domain_error);
  CHECK_THROWS_AS(FieldContext::prime(5).from_fraction(1, 5), std::domain_error);
}

TEST_CASE("field contexts reject characteristic two and composites") {
  CHECK_THROWS_AS(FieldContext::prime(2), std::invalid_argument);
  CHECK_THROWS_AS(FieldContext::prime(9), std::invalid_argument);
  CHECK_THROWS_AS(FieldContext::parse("F4"), std::invalid_argument);
  CHECK(FieldContext::parse("F_5") == FieldContext::prime(5));
  CHECK(FieldContext::parse("p7[al]") == FieldContext::prime(7, true));
  CHECK(FieldContext::parse("q").name() == "Q");
  CHECK(FieldContext::prime(5, true).name() == "F_5[al]");
}

TEST_CASE("rational overflow is reported") {
  const FieldContext q = FieldContext::rational();
  Scalar x = q.from_int(1);
  CHECK_THROWS_AS(
      [&] {
        for (int i = 0; i < 80; ++i) x *= q.from_int(3);
      }(),
      std::overflow_error);
}

TEST_CASE("text forms round trip") {
  for (const char* field : {"q", "F5", "q[al]", "F7[al]"}) {
    const FieldContext f = FieldContext::parse(field);
    for (const char* text : {"0", "1", "-1", "3", "2/3", "-5/4"}) {
      const Scalar s = f.parse_scalar(text);
      CHECK(f.parse_scalar(s.to_string()) == s);
    }
    if (f.symbolic()) {
      const Scalar s = f.parse_scalar("2 - 3*al + al^3");
      CHECK(f.parse_scalar(s.to_string()) == s);
    }
  }
}

TEST_CASE("evaluation at a value commutes with arithmetic") {
  const FieldContext qa = FieldContext::rational(true);
  std::mt19937 rng(20240611);
  std::uniform_int_distribution<int> coeff(-4, 4);
  auto random_poly = [&] {
    Scalar s = qa.zero();
    Scalar power = qa.one();
    for (int k = 0; k < 4; ++k) {
      s += qa.from_int(coeff(rng)) * power;
      power *= qa.alpha();
    }
    return s;
  };
  for (int trial = 0; trial < 50; ++trial) {
    const Scalar a = random_poly();
    const Scalar b = random_poly();
    const Scalar at = qa.from_fraction(coeff(rng), 3);
    CHECK((a + b).evaluate(at) == a.evaluate(at) + b.evaluate(at));
    CHECK((a * b).evaluate(at) == a.evaluate(at) * b.evaluate(at));
  }
}
