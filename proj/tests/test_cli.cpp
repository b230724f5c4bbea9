#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  const std::string cmd = std::string("\"") + BLOWUP_CLI_PATH + "\" " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult res;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) res.out.append(buf, n);
  const int status = pclose(pipe);
  REQUIRE(WIFEXITED(status));
  res.exit_code = WEXITSTATUS(status);
  return res;
}

json parse(const RunResult& res) {
  json doc = json::parse(res.out, nullptr, false);
  REQUIRE_FALSE(doc.is_discarded());
  return doc;
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("check: exit codes follow the verdict") {
    CHECK(run_cli("check ample \"7; 3 2 2 2 2 2 2 2 1 1 1 1\"").exit_code == 0);
    CHECK(run_cli("check ample \"6; 3 2 2 2 2 2 2 2 1 1 1 1\"").exit_code == 1);
    CHECK(run_cli("check ample --uniform d=26 r=5 m=10").exit_code == 0);
    CHECK(run_cli("check ample --uniform d=25 r=5 m=10").exit_code == 1);
  }

  TEST_CASE("check: rejection carries numerical obstructions") {
    const RunResult res = run_cli("check ample --uniform d=170 r=8 m=60 --json");
    CHECK(res.exit_code == 1);
    const json doc = parse(res);
    CHECK(doc["schema"] == 1);
    CHECK(doc["command"] == "check");
    CHECK(doc["property"] == "ample");
    CHECK(doc["input"]["uniform"]["d"] == "170");
    CHECK(doc["verdict"]["outcome"] == "not-certified");
    CHECK(doc["exit_code"] == 1);
    REQUIRE(doc.contains("obstructions"));
    bool sextic = false;
    for (const auto& o : doc["obstructions"])
      if (o["curve"]["display"] == "6; 3 2 2 2 2 2 2 2" && o["value"] == "0") sextic = true;
    CHECK(sextic);
  }

  TEST_CASE("check: the uniform chain reports the certifying criterion") {
    const json ok = parse(run_cli("check ample --uniform d=32 r=10 m=10 --conditional --json"));
    CHECK(ok["verdict"]["outcome"] == "certified");
    CHECK(ok["verdict"]["criterion"] == "ample_uniform");
    CHECK(ok["exit_code"] == 0);
  }

  TEST_CASE("check: conjecture-backed acceptance is exit code 2") {
    const RunResult bare = run_cli("check ample --uniform d=95 r=10 m=30");
    CHECK(bare.exit_code == 1);
    const RunResult res = run_cli("check ample --uniform d=95 r=10 m=30 --conditional --json");
    CHECK(res.exit_code == 2);
    const json doc = parse(res);
    CHECK(doc["verdict"]["outcome"] == "conditional");
    CHECK(doc["verdict"]["criterion"] == "ample_nagata");
    CHECK(doc["verdict"]["conjecture"] == "nagata");
  }

  TEST_CASE("check: gg and va uniform thresholds") {
    CHECK(run_cli("check gg --uniform d=33 r=10 m=10").exit_code == 0);
    CHECK(run_cli("check gg --uniform d=32 r=10 m=10").exit_code == 1);
    CHECK(run_cli("check va --uniform d=34 r=10 m=10").exit_code == 0);
    CHECK(run_cli("check va --uniform d=33 r=10 m=10").exit_code == 1);
  }

  TEST_CASE("check: permissive flag widens gg to small multiplicities") {
    const std::string cls = "\"8; 3 2 2 2 2 2 2 2 1 1 1 1\"";
    CHECK(run_cli("check gg " + cls).exit_code == 1);
    const RunResult res = run_cli("check gg " + cls + " --permissive --json");
    CHECK(res.exit_code == 0);
    CHECK(parse(res)["verdict"]["criterion"] == "gg_general_permissive");
  }

  TEST_CASE("check: --only pins a single criterion") {
    const json doc =
        parse(run_cli("check ample --uniform d=178 r=8 m=60 --only ample_uniform_lambda --json"));
    CHECK(doc["verdict"]["criterion"] == "ample_uniform_lambda");
    CHECK(doc["exit_code"] == 0);
  }

  TEST_CASE("invalid input is exit code 3") {
    CHECK(run_cli("check ample \"bogus\"").exit_code == 3);
    CHECK(run_cli("check ample").exit_code == 3);
    CHECK(run_cli("check ample \"3; 1 1\" --uniform d=3 r=2 m=1").exit_code == 3);
    CHECK(run_cli("check ample --uniform d=3 r=2").exit_code == 3);
    CHECK(run_cli("check tame \"3; 1 1\"").exit_code == 3);
    CHECK(run_cli("mindeg va --mults \"2 2\"").exit_code == 3);
  }

  TEST_CASE("reduce walks the class to the fundamental chamber") {
    const RunResult res = run_cli("reduce \"17; 6 6 6 6 6 6 6 6\" --json");
    CHECK(res.exit_code == 0);
    const json doc = parse(res);
    CHECK(doc["command"] == "reduce");
    CHECK(doc["trace"]["terminal"] == "fundamental");
    CHECK(doc["trace"]["end"]["display"] == "1; 0 0 0 0 0 0 0 0");
    CHECK(doc["trace"]["start"]["display"] == "17; 6 6 6 6 6 6 6 6");
  }

  TEST_CASE("exceptional enumeration and membership") {
    const json ej = parse(run_cli("exceptional --enumerate r=8 --json"));
    CHECK(ej["count"] == 240);
    CHECK(ej["r"] == 8);
    const json mj = parse(run_cli("exceptional \"32; 15 10 10 10 10 10 10 10 10\" --json"));
    CHECK(mj["is_exceptional"] == true);
    CHECK(mj["profile"]["self_intersection"] == "-1");
    const json nj = parse(run_cli("exceptional \"48; 17 17 17 17 17 17 17 17\" --json"));
    CHECK(nj["is_exceptional"] == false);
  }

  TEST_CASE("mindeg tabulates per-criterion thresholds") {
    const json doc = parse(run_cli("mindeg ample --mults \"3 2 2 2 2 2 2 2 1 1 1 1\" --json"));
    CHECK(doc["command"] == "mindeg");
    CHECK(doc["min_degree"] == "7");
    bool general = false;
    for (const auto& row : doc["criteria"])
      if (row["criterion"] == "ample_general" && row["min_degree"] == "7") general = true;
    CHECK(general);
    const json uni = parse(run_cli("mindeg ample --uniform r=8 m=60 --json"));
    CHECK(uni["min_degree"] == "172");
  }

  TEST_CASE("dim probes the linear system over a finite field") {
    const json doc = parse(run_cli("dim \"2; 2 2\""));
    CHECK(doc["command"] == "dim");
    CHECK(doc["report"]["actual_dim"] == 0);
    CHECK(doc["report"]["expected_dim"] == -1);
    CHECK(doc["report"]["is_special"] == true);
    CHECK(doc["report"]["prime"] == 2147483647);
    CHECK(doc["report"]["seed"] == 42);
    CHECK(doc["report"]["trials"] == 3);
  }

  TEST_CASE("dim respects explicit options and the environment seed") {
    const json doc = parse(run_cli("dim \"2; 1 1 1 1 1\" --prime 1000003 --seed 7 --trials 2"));
    CHECK(doc["report"]["prime"] == 1000003);
    CHECK(doc["report"]["seed"] == 7);
    CHECK(doc["report"]["trials"] == 2);
    CHECK(doc["report"]["actual_dim"] == 0);

    const std::string env = "BLOWUP_POSITIVITY_SEED=99 ";
    const std::string cmd = std::string("\"") + BLOWUP_CLI_PATH + "\" dim \"2; 1 1\" 2>/dev/null";
    FILE* pipe = popen((env + cmd).c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
    pclose(pipe);
    const json envdoc = json::parse(out);
    CHECK(envdoc["report"]["seed"] == 99);
  }

  TEST_CASE("repro golden files") {
    CHECK(run_cli("repro").exit_code == 0);
    CHECK(run_cli("repro --only example-2.13").exit_code == 0);
    CHECK(run_cli("repro --only no-such-case").exit_code == 3);

    SUBCASE("a perturbed golden is detected") {
      const fs::path src = BLOWUP_GOLDEN_SRC_DIR;
      const fs::path tmp = fs::temp_directory_path() / "blowup-golden-test";
      fs::remove_all(tmp);
      fs::create_directories(tmp);
      for (const auto& entry : fs::directory_iterator(src))
        fs::copy_file(entry.path(), tmp / entry.path().filename());
      std::ofstream(tmp / "example-2.10.json", std::ios::app) << "tampered\n";
      CHECK(run_cli("repro --golden-dir \"" + tmp.string() + "\"").exit_code == 1);
      fs::remove_all(tmp);
    }
    SUBCASE("missing goldens are reported distinctly") {
      const fs::path tmp = fs::temp_directory_path() / "blowup-golden-empty";
      fs::remove_all(tmp);
      fs::create_directories(tmp);
      CHECK(run_cli("repro --golden-dir \"" + tmp.string() + "\"").exit_code == 3);
      fs::remove_all(tmp);
    }
  }

  TEST_CASE("printed classes round-trip through the reduce command") {
    const json doc = parse(run_cli("reduce \"5; 3 1 2\" --json"));
    const std::string end = doc["trace"]["end"]["display"].get<std::string>();
    const RunResult again = run_cli("reduce \"" + end + "\" --json");
    CHECK(again.exit_code == 0);
    CHECK(parse(again)["trace"]["steps"].empty());
  }
}
