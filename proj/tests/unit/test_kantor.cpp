#include <doctest.h>

#include <random>

#include "kanrep/kantor.hpp"
#include "kanrep/superalgebra.hpp"
#include "support.hpp"

using namespace kanrep;
using namespace kanrep::testing;

TEST_CASE("Grassmann bracket satisfies the Kantor conditions") {
  for (unsigned n = 2; n <= 4; ++n) {
    CHECK(check_kantor_conditions(grassmann_poisson(n, FieldContext::rational())).passed());
  }
  for (unsigned n = 2; n <= 3; ++n) {
    CHECK(check_kantor_conditions(grassmann_poisson(n, FieldContext::prime(3))).passed());
    CheckOptions forced;
    forced.force_cubic_condition = true;
    CHECK(check_kantor_conditions(grassmann_poisson(n, FieldContext::rational()), forced).passed());
  }
}

TEST_CASE("Grassmann bracket is Poisson and not special") {
  const DotBracketAlgebra g = grassmann_poisson(3, FieldContext::rational());
  CHECK(g.is_poisson());
  for (unsigned k = 0; k < g.dim(); ++k) CHECK(g.derivation(k).empty());
  const auto w = nonspecial_witness(g);
  REQUIRE(w.has_value());
  const auto [f, h, t] = *w;
  CHECK_FALSE(g.bracket_of(g.bracket(f, h), unit_vector(t)).empty());
}

TEST_CASE("zero bracket gives an associative double with a special bracket") {
  DotBracketAlgebra zero(grassmann_table(2, FieldContext::rational()));
  CHECK(check_kantor_conditions(zero).passed());
  CHECK_FALSE(nonspecial_witness(zero).has_value());
  CHECK(check_jordan_superidentity(kantor_double(zero)).passed());
}

TEST_CASE("single bracket mutations are caught") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 10; ++trial) {
    DotBracketAlgebra g = grassmann_poisson(2, FieldContext::rational());
    const BracketMutation m = mutate_bracket(g, rng);
    CAPTURE(m.i);
    CAPTURE(m.j);
    const bool kantor = !check_kantor_conditions(g).passed();
    const bool jordan = !check_jordan_superidentity(kantor_double(g)).passed();
    CHECK((kantor || jordan));
  }
}

TEST_CASE("validate rejects brackets that break super-skew-symmetry") {
  DotBracketAlgebra g = grassmann_poisson(2, FieldContext::rational());
  g.set_bracket(1, 2, unit_vector(3));
  CHECK_THROWS_AS(g.validate(), std::invalid_argument);
}
