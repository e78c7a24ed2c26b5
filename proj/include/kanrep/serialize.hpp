#pragma once

#include <functional>
#include <memory>
#include <string>

#include <json.hpp>

#include "kanrep/action.hpp"
#include "kanrep/analysis.hpp"
#include "kanrep/kantor.hpp"
#include "kanrep/report.hpp"
#include "kanrep/table.hpp"

namespace kanrep {

using Json = nlohmann::ordered_json;

/// [[k, "coeff"], ...] in index order.
Json vector_to_json(const SparseVector& v);
SparseVector vector_from_json(const Json& j, const FieldContext& field);

/// {"kind": "structure_table", "field", "dim", "parities", "labels", "unit",
///  "kan", "products": [[i, j, [[k, "coeff"], ...]], ...]}; zero products
/// are omitted.
Json table_to_json(const StructureTable& table);
StructureTable table_from_json(const Json& j);

/// {"kind": "dot_bracket", "dot": <table>, "brackets": [[i, j, terms], ...]}.
Json bracket_to_json(const DotBracketAlgebra& algebra);
DotBracketAlgebra bracket_from_json(const Json& j);

/// {"kind": "bimodule_action", "algebra_ref": "kan:n" | null, "algebra":
/// <table> (only without a reference), "field", "dimV", "vparities",
/// "vlabels", "R": [[a, [[row, col, "coeff"], ...]], ...]}.  Operators that
/// vanish are omitted.
Json action_to_json(const BimoduleAction& module);
/// Resolves "kan:n" references through build_kan.
BimoduleAction action_from_json(const Json& j);

Json report_to_json(const CheckReport& report);

Json word_to_json(const StructureTable& algebra, const OperatorWord& word);

/// {"type": "irreducible", "special_vector", "witness_words", "adapted_basis"}
/// or {"type": "reducible", "subspace_basis"}.
Json certificate_to_json(const BimoduleAction& module, const IrreducibilityResult& result);

Json classification_to_json(const BimoduleAction& module, const ClassificationResult& result);

/// {"terms": [[k, "coeff"], ...], "text": "..."} with module labels.
Json labelled_vector_to_json(const SparseVector& v, const std::vector<std::string>& labels);

}  // namespace kanrep
