#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "kanrep/bimodule.hpp"
#include "kanrep/kantor.hpp"
#include "kanrep/serialize.hpp"

using namespace kanrep;

namespace {

struct Run {
  int exit_code = -1;
  std::string out;
  Json json() const { return Json::parse(out); }
};

Run run(const std::string& args) {
  const std::string cmd = std::string(KANREP_CLI) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  std::size_t got = 0;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::filesystem::path write_doc(const std::string& name, const Json& doc) {
  const auto path = std::filesystem::temp_directory_path() / ("kanrep_cli_" + name);
  std::ofstream(path) << doc.dump();
  return path;
}

}  // namespace

TEST_CASE("build emits tables and actions") {
  const Run kan = run("build kan --n 3 --field q");
  CHECK(kan.exit_code == 0);
  CHECK(kan.json().at("dim") == 16);
  const Run v = run("build valpha --n 2 --alpha 1 --parity 0");
  CHECK(v.exit_code == 0);
  CHECK(v.json().at("dimV") == 8);
  CHECK(run("build kan --n 1").exit_code == 2);
  CHECK(run("build valpha --n 2").exit_code == 2);
  CHECK(run("build kan --n 2 --field F4").exit_code == 2);
  CHECK(run("frobnicate").exit_code == 2);
}

TEST_CASE("build output round trips through the deserializer") {
  const Json doc = run("build kan --n 2 --field F5 --compact").json();
  CHECK(table_to_json(table_from_json(doc)).dump() == doc.dump());
  const Json act = run("build valpha --n 2 --alpha al --compact").json();
  CHECK(action_to_json(action_from_json(act)).dump() == act.dump());
  const auto path = write_doc("kan2.json", doc);
  CHECK(run("check jordan --file " + path.string()).exit_code == 0);
}

TEST_CASE("check suites report pass and fail with exit codes") {
  const Run jordan = run("check jordan --kan 3");
  CHECK(jordan.exit_code == 0);
  CHECK(jordan.json().at("status") == "pass");
  CHECK(run("check lemmas --valpha n=3,alpha=2").exit_code == 0);
  CHECK(run("check kantor --kan 2").exit_code == 0);
  CHECK(run("check bimodule --regular n=2").exit_code == 0);
  CHECK(run("check all --valpha n=2,alpha=al").exit_code == 0);
  CHECK(run("check lemmas --kan 2").exit_code == 2);
  CHECK(run("check jordan").exit_code == 2);
  CHECK(run("check jordan --kan 2 --valpha n=2,alpha=1").exit_code == 2);

  StructureTable bad = build_kan(2);
  bad.set_product(1, 2, scaled(bad.product(1, 2), Scalar(-1)));
  bad.set_product(2, 1, scaled(bad.product(2, 1), Scalar(-1)));
  const auto path = write_doc("corrupted.json", table_to_json(bad));
  const Run fail = run("check jordan --file " + path.string());
  CHECK(fail.exit_code == 1);
  const Json doc = fail.json();
  CHECK(doc.at("status") == "fail");
  bool limited = false;
  for (const auto& r : doc.at("reports")) {
    CHECK(r.at("violations").size() <= 10);
    limited = limited || r.at("total_violations").get<std::size_t>() > 10;
  }
  CHECK(limited);
}

TEST_CASE("thread count does not change check output") {
  StructureTable bad = build_kan(3);
  bad.set_product(9, 2, scaled(bad.product(9, 2), Scalar(-1)));
  bad.set_product(2, 9, scaled(bad.product(2, 9), Scalar(-1)));
  const auto path = write_doc("corrupted3.json", table_to_json(bad));
  Json a = run("check jordan --limit 20 --threads 1 --file " + path.string()).json();
  Json b = run("check jordan --limit 20 --threads 4 --file " + path.string()).json();
  for (auto* doc : {&a, &b}) {
    for (auto& r : (*doc)["reports"]) r.erase("timing_ms");
  }
  CHECK(a.dump() == b.dump());
}

TEST_CASE("classify, special and iso") {
  const Run c = run("classify --valpha n=2,alpha=2,parity=0");
  CHECK(c.exit_code == 0);
  CHECK(c.json().at("parity") == 0);
  CHECK(c.json().at("alpha") == "2");
  CHECK(run("classify --regular n=2").json().at("alpha") == "0");

  const BimoduleAction v = build_V_alpha({2, Scalar(1), 0, FieldContext::rational()});
  const auto path = write_doc("reducible.json", action_to_json(direct_sum(v, v)));
  const Run red = run("classify --file " + path.string());
  CHECK(red.exit_code == 1);
  CHECK(red.json().at("certificate").at("type") == "reducible");

  const Run s = run("special --valpha n=3,alpha=-1");
  CHECK(s.exit_code == 0);
  CHECK(s.json().at("special_elements").size() == 1);

  const Run iso = run("iso valpha:n=2,alpha=0 regular:n=2");
  CHECK(iso.exit_code == 0);
  CHECK(iso.json().at("isomorphic") == true);
  CHECK(iso.json().at("map").is_array());
  const Run non = run("iso valpha:n=2,alpha=1 valpha:n=2,alpha=2");
  CHECK(non.exit_code == 1);
  CHECK(non.json().at("isomorphic") == false);
}
