#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "kanrep/action.hpp"
#include "kanrep/kantor.hpp"
#include "kanrep/report.hpp"
#include "kanrep/serialize.hpp"

namespace kanrep {

/// Malformed command-line input; maps to exit code 2.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// What a target string resolves to.  `algebra` is always set; `module` is
/// set for bimodule targets and `bracket` when a dot-bracket algebra is
/// available (Kan(n) through G_n, tensor targets, dot_bracket files).
struct Target {
  std::string name;
  std::shared_ptr<const StructureTable> algebra;
  std::optional<BimoduleAction> module;
  std::optional<DotBracketAlgebra> bracket;
};

/// kind is one of kan, valpha, regular, tensor, file; params is
///   kan:     "3" or "n=3"
///   valpha:  "n=2,alpha=1,parity=0" (alpha "al" selects the symbolic field)
///   regular: "n=2" or "2"
///   tensor:  "n=2,alpha=1,N=4"
///   file:    a path to a structure_table, dot_bracket or bimodule_action
///            document
/// Any params list may carry field=<q|F5|...>, overriding `field`.  Throws
/// UsageError on malformed input or out-of-range parameters.
Target make_target(std::string_view kind, std::string_view params, const FieldContext& field);

/// "kind:params", e.g. "valpha:n=2,alpha=1".
Target parse_target(std::string_view text, const FieldContext& field);

/// Exit code and JSON document of one command.
struct CommandOutput {
  Json json;
  int exit_code = 0;
};

/// Serialized construction: kind kan | valpha | regular | tensor.
CommandOutput run_build(std::string_view kind, const Target& target);

/// suite jordan | kantor | bimodule | lemmas | all; exit 1 when any report
/// fails or the suite does not apply to the target.
CommandOutput run_check(std::string_view suite, const Target& target, const CheckOptions& options);

/// {parity, alpha, special_vector, certificate}; exit 1 with the reducibility
/// certificate when the module is reducible.
CommandOutput run_classify(const Target& target);

CommandOutput run_iso(const Target& a, const Target& b);

/// Basis of the special elements plus the irreducibility certificate.
CommandOutput run_special(const Target& target);

}  // namespace kanrep
