// End-to-end checks of the command line tool: exit codes, JSON shape, and
// byte-stable round trips. The binary path comes in via ENTRYPOW_CLI_PATH.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "entrypow/json_io.hpp"

namespace {

int failures = 0;

void check(bool ok, const std::string& what) {
  std::printf("%s  %s\n", ok ? "ok  " : "FAIL", what.c_str());
  if (!ok) ++failures;
}

struct RunResult {
  int status = -1;
  std::string out;
};

RunResult run(const std::string& args) {
  std::string cmd = std::string(ENTRYPOW_CLI_PATH) + " " + args + " > cli_out.tmp 2> cli_err.tmp";
  int rc = std::system(cmd.c_str());
  RunResult res;
  res.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  std::ifstream in("cli_out.tmp");
  std::stringstream ss;
  ss << in.rdbuf();
  res.out = ss.str();
  return res;
}

}  // namespace

int main() {
  using nlohmann::ordered_json;

  auto gen = run("gen --family band:5,2");
  check(gen.status == 0, "gen exits 0");
  check(gen.out.substr(0, 6) == "p 5 7\n", "gen emits the edge-list header");

  auto chordal = run("chordal --family cycle:6");
  check(chordal.status == 0, "chordal exits 0");
  auto cj = ordered_json::parse(chordal.out);
  check(cj["chordal"] == false, "C_6 is not chordal");
  check(cj["chordless_cycle"].size() >= 4, "certificate cycle present");

  auto ce = run("ce --family band:8,3");
  check(ce.status == 0, "ce exits 0 on a chordal family");
  auto cej = ordered_json::parse(ce.out);
  check(cej["ce"]["plain"] == 3.0, "band(8,3) exponent is 3");
  check(cej["method"] == "chordal_formula", "band uses the chordal formula");

  auto ce_bad = run("ce --family cycle:5");
  check(ce_bad.status == 2, "ce exits 2 on non-chordal input");

  auto hs = run("hset --family cycle:5");
  check(hs.status == 0, "hset exits 0");
  auto hj = ordered_json::parse(hs.out);
  check(hj["hsets"]["psi"]["mode"] == "exact", "C_5 psi set is exact");
  check(hj["hsets"]["psi"]["ray_start"] == 1.0, "C_5 psi ray is 1");
  check(hj["hsets"]["phi"]["mode"] == "bounded", "C_5 phi set is bounded");

  // canonical dump round trip through the real pipeline
  check(entrypow::canonical_dump(ordered_json::parse(hs.out)) == hs.out,
        "hset JSON round trips byte for byte");

  auto fals = run(
      "falsify --family complete:4 --kind plain --alpha 1.5 --seed 0 --trials 2000 "
      "-o fals.json");
  check(fals.status == 1, "falsify exits 1 when a counterexample exists");
  std::ifstream fj("fals.json");
  auto vj = ordered_json::parse(fj);
  check(vj["preserved"] == false, "falsify reports preserved=false");
  check(!vj["counterexample"].is_null(), "counterexample serialized");

  auto replay = run("replay fals.json");
  check(replay.status == 1, "replay confirms the counterexample with exit 1");
  auto rj = ordered_json::parse(replay.out);
  check(rj["replay"]["reproduced"] == true, "replay reproduces the violation");

  auto ok = run("falsify --family complete:4 --kind plain --alpha 2 --seed 0 --trials 500");
  check(ok.status == 0, "falsify exits 0 when preserved");

  auto cross = run("crosscheck --family band:6,3 --seed 0 --trials 600");
  check(cross.status == 0, "crosscheck exits 0 when consistent");

  auto cap = run("cliques --family cycle:70 --cap 64");
  check(cap.status == 3, "vertex cap exceeded exits 3");

  auto usage = run("falsify --family complete:4");
  check(usage.status == 2, "missing required options exit 2");

  auto badfam = run("hset --family frobnicate:9");
  check(badfam.status == 2, "unknown family exits 2");

  auto badfile = run("hset --graph does_not_exist.g");
  check(badfile.status == 2, "missing graph file exits 2");

  // file parse error carries a line number
  {
    std::ofstream bad("bad.g");
    bad << "e 1 2\np 2 1\n";
  }
  auto badparse = run("hset --graph bad.g");
  check(badparse.status == 2, "edge before header exits 2");

  auto probe = run("probe --family cycle:4 --grid 1.75,2.0 --seed 0 --trials 300");
  check(probe.status == 0, "probe exits 0 when consistent with closed forms");
  auto pj = ordered_json::parse(probe.out);
  check(pj["points"][0]["phi"] == false, "probe sees the phi violation at 1.75");
  check(pj["points"][1]["phi"] == true, "probe sees phi preserved at 2.0");

  std::remove("cli_out.tmp");
  std::remove("cli_err.tmp");
  std::remove("fals.json");
  std::remove("bad.g");

  if (failures) {
    std::printf("%d CLI check(s) failed\n", failures);
    return 1;
  }
  std::puts("all CLI checks passed");
  return 0;
}
