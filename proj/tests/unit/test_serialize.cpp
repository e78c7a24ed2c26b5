#include <doctest.h>

#include "kanrep/bimodule.hpp"
#include "kanrep/kantor.hpp"
#include "kanrep/serialize.hpp"
#include "kanrep/superalgebra.hpp"
#include "kanrep/tensor.hpp"

using namespace kanrep;

TEST_CASE("structure tables round trip bit-exactly") {
  for (const char* f : {"q", "F5", "q[al]"}) {
    const StructureTable k = build_kan(3, FieldContext::parse(f));
    const Json doc = table_to_json(k);
    const StructureTable back = table_from_json(Json::parse(doc.dump()));
    CHECK(table_to_json(back).dump() == doc.dump());
    CHECK(back.kan_generators() == 3U);
    CHECK(back.unit() == k.unit());
  }
  const StructureTable t = build_J_GnT_alpha(2, Scalar(2), 3, FieldContext::rational());
  CHECK(table_to_json(table_from_json(table_to_json(t))).dump() == table_to_json(t).dump());
}

TEST_CASE("dot-bracket algebras round trip") {
  const DotBracketAlgebra g = grassmann_poisson(3, FieldContext::prime(7));
  const Json doc = bracket_to_json(g);
  const DotBracketAlgebra back = bracket_from_json(Json::parse(doc.dump()));
  CHECK(bracket_to_json(back).dump() == doc.dump());
  CHECK(check_kantor_conditions(back).passed());
}

TEST_CASE("bimodule actions round trip with referenced and embedded algebras") {
  const FieldContext qa = FieldContext::rational(true);
  const BimoduleAction v = build_V_alpha({2, qa.alpha(), 1, qa});
  const Json doc = action_to_json(v);
  CHECK(doc.at("algebra_ref") == "kan:2");
  const BimoduleAction back = action_from_json(Json::parse(doc.dump()));
  CHECK(action_to_json(back).dump() == doc.dump());
  CHECK(back.right == v.right);

  auto t = std::make_shared<const StructureTable>(build_J_GnT_alpha(2, Scalar(1), 2, FieldContext::rational()));
  const BimoduleAction reg = regular_bimodule(t);
  const Json rdoc = action_to_json(reg);
  CHECK(rdoc.at("algebra_ref").is_null());
  CHECK(action_to_json(action_from_json(rdoc)).dump() == rdoc.dump());
}

TEST_CASE("malformed documents are rejected") {
  Json doc = table_to_json(build_kan(2));
  CHECK_THROWS_AS(table_from_json(Json::object()), std::invalid_argument);
  Json wrong_kind = doc;
  wrong_kind["kind"] = "dot_bracket";
  CHECK_THROWS_AS(table_from_json(wrong_kind), std::invalid_argument);
  Json bad_index = doc;
  bad_index["products"].push_back(Json::array({99, 0, Json::array()}));
  CHECK_THROWS_AS(table_from_json(bad_index), std::invalid_argument);
  Json bad_parity = doc;
  bad_parity["parities"][0] = 2;
  CHECK_THROWS_AS(table_from_json(bad_parity), std::invalid_argument);
  Json bad_field = doc;
  bad_field["field"] = "F4";
  CHECK_THROWS_AS(table_from_json(bad_field), std::invalid_argument);

  Json action = action_to_json(build_V_alpha({2, Scalar(1), 0, FieldContext::rational()}));
  action["dimV"] = 3;
  CHECK_THROWS_AS(action_from_json(action), std::invalid_argument);
}

TEST_CASE("reports serialize residuals as labelled strings") {
  StructureTable k = build_kan(2);
  k.set_product(1, 2, scaled(k.product(1, 2), Scalar(-1)));
  const Json r = report_to_json(check_supercommutative(k));
  CHECK(r.at("status") == "fail");
  CHECK(r.at("total_violations") == 1);
  REQUIRE(r.at("violations").size() == 1);
  const Json& v = r.at("violations")[0];
  CHECK(v.at("input_labels").size() == 2);
  CHECK(v.at("residual")[0][1].is_string());
}
