#include "kanrep/serialize.hpp"

#include <algorithm>
#include <stdexcept>

namespace kanrep {

namespace {

template <class T>
T required(const Json& j, const char* key) {
  if (!j.contains(key)) throw std::invalid_argument(std::string("missing field '") + key + "'");
  return j.at(key).get<T>();
}

void expect_kind(const Json& j, const char* kind) {
  if (!j.is_object() || required<std::string>(j, "kind") != kind) {
    throw std::invalid_argument(std::string("expected a ") + kind + " document");
  }
}

}  // namespace

Json vector_to_json(const SparseVector& v) {
  Json out = Json::array();
  for (const auto& [k, c] : v) out.push_back(Json::array({k, c.to_string()}));
  return out;
}

SparseVector vector_from_json(const Json& j, const FieldContext& field) {
  if (!j.is_array()) throw std::invalid_argument("vector must be a list of [index, coeff] pairs");
  SparseVector v;
  for (const auto& term : j) {
    if (!term.is_array() || term.size() != 2) throw std::invalid_argument("malformed vector term");
    v.emplace_back(term[0].get<std::size_t>(), field.parse_scalar(term[1].get<std::string>()));
  }
  canonicalize(v);
  return v;
}

Json table_to_json(const StructureTable& table) {
  Json out;
  out["kind"] = "structure_table";
  out["field"] = table.field().name();
  out["dim"] = table.dim();
  out["parities"] = table.parities();
  out["labels"] = table.labels();
  out["unit"] = table.unit() ? Json(*table.unit()) : Json(nullptr);
  out["kan"] = table.kan_generators() ? Json(*table.kan_generators()) : Json(nullptr);
  Json products = Json::array();
  for (std::size_t i = 0; i < table.dim(); ++i) {
    for (std::size_t j = 0; j < table.dim(); ++j) {
      if (!table.product(i, j).empty()) products.push_back(Json::array({i, j, vector_to_json(table.product(i, j))}));
    }
  }
  out["products"] = std::move(products);
  return out;
}

StructureTable table_from_json(const Json& j) {
  expect_kind(j, "structure_table");
  const FieldContext field = FieldContext::parse(required<std::string>(j, "field"));
  const auto parities = required<std::vector<unsigned>>(j, "parities");
  if (required<std::size_t>(j, "dim") != parities.size()) throw std::invalid_argument("dim does not match parities");
  for (unsigned p : parities) {
    if (p > 1) throw std::invalid_argument("parities must be 0 or 1");
  }
  std::vector<std::string> labels;
  if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
  StructureTable table(field, parities, labels);
  for (const auto& entry : required<Json>(j, "products")) {
    if (!entry.is_array() || entry.size() != 3) throw std::invalid_argument("malformed product entry");
    const auto a = entry[0].get<std::size_t>();
    const auto b = entry[1].get<std::size_t>();
    if (a >= table.dim() || b >= table.dim()) throw std::invalid_argument("product index out of range");
    SparseVector v = vector_from_json(entry[2], field);
    for (const auto& [k, c] : v) {
      if (k >= table.dim()) throw std::invalid_argument("product term index out of range");
    }
    table.set_product(a, b, std::move(v));
  }
  if (j.contains("unit") && !j.at("unit").is_null()) table.set_unit(j.at("unit").get<std::size_t>());
  if (j.contains("kan") && !j.at("kan").is_null()) table.set_kan_generators(j.at("kan").get<unsigned>());
  return table;
}

Json bracket_to_json(const DotBracketAlgebra& algebra) {
  Json out;
  out["kind"] = "dot_bracket";
  out["dot"] = table_to_json(algebra.dot());
  Json brackets = Json::array();
  for (std::size_t i = 0; i < algebra.dim(); ++i) {
    for (std::size_t j = 0; j < algebra.dim(); ++j) {
      if (!algebra.bracket(i, j).empty()) brackets.push_back(Json::array({i, j, vector_to_json(algebra.bracket(i, j))}));
    }
  }
  out["brackets"] = std::move(brackets);
  return out;
}

DotBracketAlgebra bracket_from_json(const Json& j) {
  expect_kind(j, "dot_bracket");
  DotBracketAlgebra algebra(table_from_json(required<Json>(j, "dot")));
  for (const auto& entry : required<Json>(j, "brackets")) {
    if (!entry.is_array() || entry.size() != 3) throw std::invalid_argument("malformed bracket entry");
    algebra.set_bracket(entry[0].get<std::size_t>(), entry[1].get<std::size_t>(),
                        vector_from_json(entry[2], algebra.field()));
  }
  return algebra;
}

Json action_to_json(const BimoduleAction& module) {
  const StructureTable& algebra = *module.algebra;
  Json out;
  out["kind"] = "bimodule_action";
  if (algebra.kan_generators()) {
    out["algebra_ref"] = "kan:" + std::to_string(*algebra.kan_generators());
  } else {
    out["algebra_ref"] = nullptr;
    out["algebra"] = table_to_json(algebra);
  }
  out["field"] = algebra.field().name();
  out["dimV"] = module.dim();
  out["vparities"] = module.vparity;
  out["vlabels"] = module.vlabels;
  Json ops = Json::array();
  for (std::size_t a = 0; a < module.right.size(); ++a) {
    Json entries = Json::array();
    for (std::size_t i = 0; i < module.dim(); ++i) {
      for (const auto& [k, c] : module.R(a).rows[i]) entries.push_back(Json::array({i, k, c.to_string()}));
    }
    if (!entries.empty()) ops.push_back(Json::array({a, std::move(entries)}));
  }
  out["R"] = std::move(ops);
  return out;
}

BimoduleAction action_from_json(const Json& j) {
  expect_kind(j, "bimodule_action");
  const FieldContext field = FieldContext::parse(required<std::string>(j, "field"));
  BimoduleAction m;
  const Json& ref = required<Json>(j, "algebra_ref");
  if (ref.is_string()) {
    const std::string text = ref.get<std::string>();
    if (text.rfind("kan:", 0) != 0) throw std::invalid_argument("unknown algebra reference '" + text + "'");
    m.algebra = std::make_shared<const StructureTable>(build_kan(static_cast<unsigned>(std::stoul(text.substr(4))), field));
  } else {
    m.algebra = std::make_shared<const StructureTable>(table_from_json(required<Json>(j, "algebra")));
    if (!(m.algebra->field() == field)) throw std::invalid_argument("module and algebra fields differ");
  }
  m.vparity = required<std::vector<unsigned>>(j, "vparities");
  const auto d = required<std::size_t>(j, "dimV");
  if (d != m.vparity.size()) throw std::invalid_argument("dimV does not match vparities");
  if (j.contains("vlabels")) m.vlabels = j.at("vlabels").get<std::vector<std::string>>();
  if (!m.vlabels.empty() && m.vlabels.size() != d) throw std::invalid_argument("vlabels size mismatch");
  m.right.assign(m.algebra->dim(), SparseMatrix::zero(d, d));
  for (const auto& op : required<Json>(j, "R")) {
    if (!op.is_array() || op.size() != 2) throw std::invalid_argument("malformed operator entry");
    const auto a = op[0].get<std::size_t>();
    if (a >= m.right.size()) throw std::invalid_argument("operator index out of range");
    for (const auto& e : op[1]) {
      if (!e.is_array() || e.size() != 3) throw std::invalid_argument("malformed matrix entry");
      const auto row = e[0].get<std::size_t>();
      const auto col = e[1].get<std::size_t>();
      if (row >= d || col >= d) throw std::invalid_argument("matrix index out of range");
      m.right[a].rows[row].emplace_back(col, field.parse_scalar(e[2].get<std::string>()));
    }
    for (auto& row : m.right[a].rows) canonicalize(row);
  }
  m.validate();
  return m;
}

Json report_to_json(const CheckReport& report) {
  Json out;
  out["subject"] = report.subject;
  out["status"] = report.passed() ? "pass" : "fail";
  Json violations = Json::array();
  for (const auto& v : report.violations) {
    Json residual = Json::array();
    for (const auto& [label, c] : v.residual) residual.push_back(Json::array({label, c.to_string()}));
    violations.push_back({{"relation", v.relation},
                          {"inputs", v.inputs},
                          {"input_labels", v.input_labels},
                          {"residual", std::move(residual)}});
  }
  out["violations"] = std::move(violations);
  out["total_violations"] = report.total_violations;
  out["cases"] = report.cases_checked;
  out["timing_ms"] = report.millis;
  return out;
}

Json word_to_json(const StructureTable& algebra, const OperatorWord& word) {
  Json factors = Json::array();
  for (std::size_t f : word.factors) factors.push_back(algebra.label(f));
  return {{"coefficient", word.coefficient.to_string()},
          {"factors", std::move(factors)},
          {"text", word_to_string(algebra, word)}};
}

Json labelled_vector_to_json(const SparseVector& v, const std::vector<std::string>& labels) {
  std::vector<std::string> names = labels;
  if (names.empty()) {
    std::size_t top = 0;
    for (const auto& [k, c] : v) top = std::max(top, k + 1);
    for (std::size_t i = 0; i < top; ++i) names.push_back("v" + std::to_string(i));
  }
  return {{"terms", vector_to_json(v)}, {"text", format_vector(v, names)}};
}

Json certificate_to_json(const BimoduleAction& module, const IrreducibilityResult& result) {
  Json out;
  if (result.irreducible) {
    out["type"] = "irreducible";
    out["special_vector"] = labelled_vector_to_json(result.special_vector, module.vlabels);
    Json words = Json::array();
    for (const auto& w : result.witnesses) {
      Json entry = word_to_json(*module.algebra, w.word);
      entry["target"] = w.target;
      words.push_back(std::move(entry));
    }
    out["witness_words"] = std::move(words);
    Json basis = Json::array();
    for (const auto& b : result.adapted_basis) basis.push_back(labelled_vector_to_json(b, module.vlabels));
    out["adapted_basis"] = std::move(basis);
  } else {
    out["type"] = "reducible";
    Json basis = Json::array();
    for (const auto& b : result.subspace_basis) basis.push_back(labelled_vector_to_json(b, module.vlabels));
    out["subspace_dim"] = result.subspace_basis.size();
    out["subspace_basis"] = std::move(basis);
  }
  return out;
}

Json classification_to_json(const BimoduleAction& module, const ClassificationResult& result) {
  return {{"parity", result.v_parity},
          {"alpha", result.alpha.to_string()},
          {"special_vector", labelled_vector_to_json(result.special_vector, module.vlabels)}};
}

}  // namespace kanrep
