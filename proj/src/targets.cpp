#include "kanrep/targets.hpp"

#include <fstream>
#include <map>

#include "kanrep/analysis.hpp"
#include "kanrep/bimodule.hpp"
#include "kanrep/superalgebra.hpp"
#include "kanrep/tensor.hpp"

namespace kanrep {

namespace {

using Params = std::map<std::string, std::string>;

Params parse_params(std::string_view text, const char* bare_key) {
  Params out;
  std::size_t start = 0;
  while (start <= text.size() && !text.empty()) {
    const auto comma = text.find(',', start);
    const std::string item(text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
    if (item.empty()) throw UsageError("empty parameter in '" + std::string(text) + "'");
    const auto eq = item.find('=');
    if (eq == std::string::npos) {
      if (!bare_key || out.contains(bare_key)) throw UsageError("parameter '" + item + "' needs the form key=value");
      out[bare_key] = item;
    } else {
      out[item.substr(0, eq)] = item.substr(eq + 1);
    }
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

void allow_only(const Params& params, std::initializer_list<const char*> keys) {
  for (const auto& [k, v] : params) {
    bool known = false;
    for (const char* key : keys) known = known || k == key;
    if (!known) throw UsageError("unknown parameter '" + k + "'");
  }
}

unsigned parse_unsigned(const Params& params, const char* key, std::optional<unsigned> fallback = std::nullopt) {
  const auto it = params.find(key);
  if (it == params.end()) {
    if (fallback) return *fallback;
    throw UsageError(std::string("missing parameter '") + key + "'");
  }
  try {
    std::size_t used = 0;
    const long v = std::stol(it->second, &used);
    if (used != it->second.size() || v < 0) throw std::invalid_argument("negative");
    return static_cast<unsigned>(v);
  } catch (const std::exception&) {
    throw UsageError(std::string("parameter '") + key + "' must be a non-negative integer");
  }
}

unsigned generator_count(const Params& params) {
  const unsigned n = parse_unsigned(params, "n");
  if (n < 2 || n > kMaxKanGenerators) {
    throw UsageError("n must lie in [2, " + std::to_string(kMaxKanGenerators) + "]");
  }
  return n;
}

FieldContext effective_field(const Params& params, FieldContext field, bool symbolic_alpha) {
  if (const auto it = params.find("field"); it != params.end()) {
    try {
      field = FieldContext::parse(it->second);
    } catch (const std::exception& e) {
      throw UsageError(std::string("bad field: ") + e.what());
    }
  }
  if (symbolic_alpha && !field.symbolic()) field = FieldContext(field.kind(), field.modulus(), true);
  return field;
}

bool mentions_parameter(const Params& params) {
  const auto it = params.find("alpha");
  return it != params.end() && it->second.find("al") != std::string::npos;
}

Scalar parse_alpha(const Params& params, const FieldContext& field) {
  const auto it = params.find("alpha");
  if (it == params.end()) throw UsageError("missing parameter 'alpha'");
  try {
    return field.parse_scalar(it->second);
  } catch (const std::exception& e) {
    throw UsageError("bad alpha '" + it->second + "': " + e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw UsageError("'" + path + "' is not valid JSON: " + e.what());
  }
}

Target file_target(const std::string& path) {
  const Json doc = read_json_file(path);
  Target t;
  t.name = "file:" + path;
  try {
    const std::string kind = doc.is_object() && doc.contains("kind") ? doc.at("kind").get<std::string>() : "";
    if (kind == "structure_table") {
      t.algebra = std::make_shared<const StructureTable>(table_from_json(doc));
    } else if (kind == "dot_bracket") {
      t.bracket = bracket_from_json(doc);
      t.algebra = std::make_shared<const StructureTable>(kantor_double(*t.bracket));
    } else if (kind == "bimodule_action") {
      t.module = action_from_json(doc);
      t.algebra = t.module->algebra;
    } else {
      throw UsageError("'" + path + "' has no recognised \"kind\"");
    }
  } catch (const UsageError&) {
    throw;
  } catch (const std::exception& e) {
    throw UsageError("'" + path + "': " + e.what());
  }
  return t;
}

Json pass_fail(bool ok) { return ok ? "pass" : "fail"; }

}  // namespace

Target make_target(std::string_view kind, std::string_view params_text, const FieldContext& default_field) {
  if (kind == "file") return file_target(std::string(params_text));
  Target t;
  t.name = std::string(kind) + ":" + std::string(params_text);
  try {
    if (kind == "kan" || kind == "regular") {
      const Params params = parse_params(params_text, "n");
      allow_only(params, {"n", "field"});
      const unsigned n = generator_count(params);
      const FieldContext field = effective_field(params, default_field, false);
      t.bracket = grassmann_poisson(n, field);
      t.algebra = std::make_shared<const StructureTable>(build_kan(n, field));
      if (kind == "regular") t.module = regular_bimodule(t.algebra);
    } else if (kind == "valpha") {
      const Params params = parse_params(params_text, nullptr);
      allow_only(params, {"n", "alpha", "parity", "field"});
      const unsigned n = generator_count(params);
      const FieldContext field = effective_field(params, default_field, mentions_parameter(params));
      const Scalar alpha = parse_alpha(params, field);
      const unsigned parity = parse_unsigned(params, "parity", n & 1U);
      if (parity > 1) throw UsageError("parity must be 0 or 1");
      t.algebra = std::make_shared<const StructureTable>(build_kan(n, field));
      t.module = build_V_alpha(VAlphaSpec{n, alpha, parity, field}, t.algebra);
    } else if (kind == "tensor") {
      const Params params = parse_params(params_text, nullptr);
      allow_only(params, {"n", "alpha", "N", "field"});
      const unsigned n = generator_count(params);
      const FieldContext field = effective_field(params, default_field, mentions_parameter(params));
      const Scalar alpha = parse_alpha(params, field);
      const unsigned truncation = parse_unsigned(params, "N", 4U);
      if (truncation < 2) throw UsageError("N must be at least 2");
      t.bracket = jordan_bracket_tensor(grassmann_poisson(n, field), graded_generalized_derivation(n, field),
                                        TruncatedPolyAlgebra{truncation, alpha});
      t.algebra = std::make_shared<const StructureTable>(kantor_double(*t.bracket));
    } else {
      throw UsageError("unknown target kind '" + std::string(kind) + "'");
    }
  } catch (const UsageError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  return t;
}

Target parse_target(std::string_view text, const FieldContext& field) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) throw UsageError("target '" + std::string(text) + "' needs the form kind:params");
  return make_target(text.substr(0, colon), text.substr(colon + 1), field);
}

CommandOutput run_build(std::string_view kind, const Target& target) {
  if (kind == "kan" || kind == "tensor") return {table_to_json(*target.algebra), 0};
  if ((kind == "valpha" || kind == "regular") && target.module) return {action_to_json(*target.module), 0};
  throw UsageError("cannot build '" + std::string(kind) + "'");
}

CommandOutput run_check(std::string_view suite, const Target& target, const CheckOptions& options) {
  const bool all = suite == "all";
  if (!all && suite != "jordan" && suite != "kantor" && suite != "bimodule" && suite != "lemmas") {
    throw UsageError("unknown suite '" + std::string(suite) + "'");
  }
  std::vector<CheckReport> reports;
  if (suite == "jordan" || all) {
    if (target.module) {
      reports.push_back(check_jordan_bimodule(*target.module, options));
    } else {
      reports.push_back(check_table_invariants(*target.algebra, options));
      reports.push_back(check_supercommutative(*target.algebra, options));
      reports.push_back(check_jordan_superidentity(*target.algebra, options));
      if (all) reports.push_back(check_super_associator_identity(*target.algebra, options));
    }
  }
  if (suite == "kantor" || (all && target.bracket && !target.module)) {
    if (!target.bracket) throw UsageError("suite 'kantor' needs a dot-bracket target (kan, tensor or a dot_bracket file)");
    reports.push_back(check_kantor_conditions(*target.bracket, options));
  }
  if (suite == "bimodule" || (all && target.module)) {
    if (!target.module) throw UsageError("suite 'bimodule' needs a bimodule target");
    if (!all) reports.push_back(check_jordan_bimodule(*target.module, options));
    reports.push_back(check_operator_relations(*target.module, options));
  }
  if (suite == "lemmas" || (all && target.module && target.algebra->kan_generators())) {
    if (!target.module || !target.algebra->kan_generators()) throw UsageError("suite 'lemmas' needs a Kan(n)-bimodule target");
    try {
      reports.push_back(check_lemmas(*target.module, options));
    } catch (const std::invalid_argument& e) {
      CheckReport failed;
      failed.subject = "lemmas";
      failed.total_violations = 1;
      failed.violations.push_back(Violation{std::string("precondition: ") + e.what(), {}, {}, {}});
      reports.push_back(std::move(failed));
    }
  }
  bool ok = true;
  Json list = Json::array();
  for (const auto& r : reports) {
    ok = ok && r.passed();
    list.push_back(report_to_json(r));
  }
  Json out;
  out["target"] = target.name;
  out["suite"] = std::string(suite);
  out["status"] = pass_fail(ok);
  out["reports"] = std::move(list);
  return {std::move(out), ok ? 0 : 1};
}

namespace {

const BimoduleAction& require_module(const Target& target) {
  if (!target.module) throw UsageError("target '" + target.name + "' is not a bimodule");
  if (!target.algebra->kan_generators()) throw UsageError("target '" + target.name + "' is not a Kan(n)-bimodule");
  return *target.module;
}

CommandOutput analysis_error(const Target& target, const std::exception& e) {
  return {Json{{"target", target.name}, {"status", "fail"}, {"error", e.what()}}, 1};
}

}  // namespace

CommandOutput run_classify(const Target& target) {
  const BimoduleAction& m = require_module(target);
  try {
    const IrreducibilityResult irr = check_irreducible(m);
    if (!irr.irreducible) {
      return {Json{{"target", target.name}, {"status", "reducible"}, {"certificate", certificate_to_json(m, irr)}}, 1};
    }
    Json out = classification_to_json(m, classify(m));
    out["target"] = target.name;
    out["status"] = "irreducible";
    out["certificate"] = certificate_to_json(m, irr);
    return {std::move(out), 0};
  } catch (const std::exception& e) {
    return analysis_error(target, e);
  }
}

CommandOutput run_iso(const Target& a, const Target& b) {
  const BimoduleAction& ma = require_module(a);
  const BimoduleAction& mb = require_module(b);
  try {
    const IsomorphismResult r = check_isomorphic(ma, mb);
    Json out;
    out["left"] = a.name;
    out["right"] = b.name;
    out["isomorphic"] = r.isomorphic;
    out["reason"] = r.reason;
    if (r.map) {
      Json entries = Json::array();
      for (std::size_t i = 0; i < r.map->rows.size(); ++i) {
        for (const auto& [k, c] : r.map->rows[i]) entries.push_back(Json::array({i, k, c.to_string()}));
      }
      out["map"] = std::move(entries);
    } else {
      out["map"] = nullptr;
    }
    return {std::move(out), r.isomorphic ? 0 : 1};
  } catch (const std::exception& e) {
    return analysis_error(a, e);
  }
}

CommandOutput run_special(const Target& target) {
  const BimoduleAction& m = require_module(target);
  try {
    const auto special = special_elements(m);
    Json out;
    out["target"] = target.name;
    out["dimension"] = special.size();
    Json basis = Json::array();
    for (const auto& v : special) {
      Json entry = labelled_vector_to_json(v, m.vlabels);
      entry["parity"] = *m.parity_of(v);
      basis.push_back(std::move(entry));
    }
    out["special_elements"] = std::move(basis);
    if (special.empty()) {
      out["status"] = "fail";
      return {std::move(out), 1};
    }
    out["status"] = "pass";
    out["certificate"] = certificate_to_json(m, check_irreducible(m));
    return {std::move(out), 0};
  } catch (const std::exception& e) {
    return analysis_error(target, e);
  }
}

}  // namespace kanrep
