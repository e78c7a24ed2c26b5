#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "kanrep/targets.hpp"

namespace {

struct TargetFlags {
  std::string kan, valpha, regular, tensor, file, target;

  void attach(CLI::App* cmd) {
    auto* group = cmd->add_option_group("target", "exactly one target");
    group->add_option("--kan", kan, "Kan(n): n or n=..,field=..");
    group->add_option("--valpha", valpha, "V(alpha): n=..,alpha=..[,parity=..][,field=..]");
    group->add_option("--regular", regular, "regular Kan(n)-bimodule: n=..");
    group->add_option("--tensor", tensor, "J(G_n[t])_alpha: n=..,alpha=..[,N=..]");
    group->add_option("--file", file, "JSON document written by build");
    group->add_option("--target", target, "kind:params");
    group->require_option(1);
  }

  kanrep::Target resolve(const kanrep::FieldContext& field) const {
    if (!kan.empty()) return kanrep::make_target("kan", kan, field);
    if (!valpha.empty()) return kanrep::make_target("valpha", valpha, field);
    if (!regular.empty()) return kanrep::make_target("regular", regular, field);
    if (!tensor.empty()) return kanrep::make_target("tensor", tensor, field);
    if (!file.empty()) return kanrep::make_target("file", file, field);
    return kanrep::parse_target(target, field);
  }
};

kanrep::FieldContext parse_field(const std::string& text) {
  try {
    return kanrep::FieldContext::parse(text);
  } catch (const std::exception& e) {
    throw kanrep::UsageError(std::string("bad --field: ") + e.what());
  }
}

int emit(const kanrep::CommandOutput& out, bool compact) {
  std::cout << (compact ? out.json.dump() : out.json.dump(2)) << "\n";
  return out.exit_code;
}

void progress(const kanrep::Json& doc) {
  if (!doc.contains("reports")) return;
  for (const auto& r : doc.at("reports")) {
    std::cerr << r.at("subject").get<std::string>() << ": " << r.at("status").get<std::string>() << " ("
              << r.at("total_violations").get<std::size_t>() << " violations, " << r.at("cases").get<std::size_t>()
              << " cases)\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Kan(n) superalgebra and V(alpha) bimodule engine"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string field_text = "q";
  bool compact = false;
  app.add_option("--field", field_text, "q, F5, p7, ... with optional [al] suffix")->capture_default_str();
  app.add_flag("--compact", compact, "single-line JSON");

  std::string build_kind, alpha_text;
  unsigned n = 0, truncation = 4;
  std::optional<unsigned> parity;
  auto* build = app.add_subcommand("build", "serialize a structure table or bimodule action");
  build->add_option("kind", build_kind, "kan | valpha | regular | tensor")->required()
      ->check(CLI::IsMember({"kan", "valpha", "regular", "tensor"}));
  build->add_option("--n", n, "number of Grassmann generators")->required();
  build->add_option("--alpha", alpha_text, "alpha, e.g. 1, -1/2 or al");
  build->add_option("--parity", parity, "parity of the special element (default n mod 2)");
  build->add_option("-N,--N", truncation, "truncation order of F[t]/(t^N)")->capture_default_str();
  build->add_option("--field", field_text, "coefficient field");

  std::string suite;
  kanrep::CheckOptions options;
  TargetFlags check_target;
  auto* check = app.add_subcommand("check", "run a verification suite");
  check->add_option("suite", suite, "jordan | kantor | bimodule | lemmas | all")->required()
      ->check(CLI::IsMember({"jordan", "kantor", "bimodule", "lemmas", "all"}));
  check->add_option("--limit", options.limit, "violations reported per check")->capture_default_str();
  check->add_option("--threads", options.threads, "worker threads")->capture_default_str();
  check->add_option("--field", field_text, "coefficient field");
  check_target.attach(check);

  TargetFlags classify_target;
  auto* classify = app.add_subcommand("classify", "parity and alpha of an irreducible Kan(n)-bimodule");
  classify->add_option("--field", field_text, "coefficient field");
  classify_target.attach(classify);

  std::vector<std::string> iso_targets;
  auto* iso = app.add_subcommand("iso", "decide isomorphism of two Kan(n)-bimodules");
  iso->add_option("targets", iso_targets, "two targets kind:params")->required()->expected(2);
  iso->add_option("--field", field_text, "coefficient field");

  TargetFlags special_target;
  auto* special = app.add_subcommand("special", "special elements and irreducibility certificate");
  special->add_option("--field", field_text, "coefficient field");
  special_target.attach(special);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    const kanrep::FieldContext field = parse_field(field_text);
    if (*build) {
      std::string params = "n=" + std::to_string(n);
      if (build_kind == "valpha" || build_kind == "tensor") {
        if (alpha_text.empty()) throw kanrep::UsageError("--alpha is required for " + build_kind);
        params += ",alpha=" + alpha_text;
      }
      if (build_kind == "valpha" && parity) params += ",parity=" + std::to_string(*parity);
      if (build_kind == "tensor") params += ",N=" + std::to_string(truncation);
      return emit(kanrep::run_build(build_kind, kanrep::make_target(build_kind, params, field)), compact);
    }
    if (*check) {
      if (options.threads == 0) throw kanrep::UsageError("--threads must be positive");
      const kanrep::CommandOutput out = kanrep::run_check(suite, check_target.resolve(field), options);
      progress(out.json);
      return emit(out, compact);
    }
    if (*classify) return emit(kanrep::run_classify(classify_target.resolve(field)), compact);
    if (*iso) {
      return emit(kanrep::run_iso(kanrep::parse_target(iso_targets[0], field), kanrep::parse_target(iso_targets[1], field)),
                  compact);
    }
    if (*special) return emit(kanrep::run_special(special_target.resolve(field)), compact);
  } catch (const kanrep::UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
