#include <catch2/catch_amalgamated.hpp>

#include <json.hpp>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

using nlohmann::json;

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(TWODET_CLI_PATH) + " " + args + " 2>/dev/null";
  std::array<char, 4096> buf{};
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

std::string write_temp(const std::string& name, const std::string& content) {
  std::string path = std::string("/tmp/twodet_test_") + name;
  std::ofstream f(path);
  f << content;
  return path;
}

}  // namespace

TEST_CASE("classify: structured result and structured errors", "[cli]") {
  std::string ok = write_temp("m1.json", R"({
    "field": "fp:32003",
    "variables": ["x1", "x2", "x3"],
    "rows": [["x1", "x2"], ["x2", "x3"]]
  })");
  RunResult r = run_cli("classify " + ok);
  REQUIRE(r.exit_code == 0);
  json j = json::parse(r.out);
  REQUIRE(j["lambda"] == json::array({2}));
  REQUIRE(j["mu"] == json::array());

  std::string cone = write_temp("m2.json", R"({
    "field": "fp:32003",
    "variables": ["x1", "x2", "x3", "x4"],
    "rows": [["x1", "x2"], ["x2", "x3"]]
  })");
  RunResult rc = run_cli("classify " + cone);
  REQUIRE(rc.exit_code == 3);
  json jc = json::parse(rc.out);
  REQUIRE(jc["error"]["code"] == "cone-detected");
}

TEST_CASE("normal-form emits a matrix file that classify accepts", "[cli]") {
  std::string blocks = write_temp("b1.json", R"([
    {"kind": "scroll", "size": 2},
    {"kind": "jordan", "size": 2, "eigenvalue": "3"}
  ])");
  RunResult r = run_cli("normal-form " + blocks);
  REQUIRE(r.exit_code == 0);
  std::string matrix_path = write_temp("m3.json", r.out);
  RunResult rc = run_cli("classify " + matrix_path);
  REQUIRE(rc.exit_code == 0);
  json j = json::parse(rc.out);
  REQUIRE(j["label"] == "(2;2)");
}

TEST_CASE("relations listing with verified leading monomials", "[cli]") {
  RunResult r = run_cli("relations --d 1 --e 3");
  REQUIRE(r.exit_code == 0);
  json j = json::parse(r.out);
  REQUIRE(j["count"] == 9);  // 4 UEN + 4 LEN + 1 PLU
  RunResult rp = run_cli("--field rational relations --d 1 --e 3 --family PLU");
  json jp = json::parse(rp.out);
  REQUIRE(jp["count"] == 1);
  REQUIRE(jp["relations"][0]["polynomial"] ==
          "T[1,2]*T[3,4] - T[1,3]*T[2,4] + T[1,4]*T[2,3]");
}

TEST_CASE("gb-verify exit codes and certificate payload", "[cli]") {
  RunResult r = run_cli("gb-verify --d 1 --e 4 --rees");
  REQUIRE(r.exit_code == 0);
  json j = json::parse(r.out);
  REQUIRE(j["verified"] == true);
  REQUIRE(j["family_is_groebner"] == true);
  REQUIRE(j["spairs"]["total"].get<int>() > 0);
}

TEST_CASE("kernel subcommand returns the degenerate small kernels", "[cli]") {
  RunResult r = run_cli("kernel --d 0 --e 3 --fiber");
  REQUIRE(r.exit_code == 0);
  json j = json::parse(r.out);
  REQUIRE(j["generator_count"] == 0);
  RunResult r13 = run_cli("kernel --d 1 --e 3 --fiber");
  json j13 = json::parse(r13.out);
  REQUIRE(j13["generator_count"] == 1);
}

TEST_CASE("complex count and poset summaries", "[cli]") {
  RunResult r = run_cli("complex --which R --d 1 --e 4 count");
  REQUIRE(r.exit_code == 0);
  json j = json::parse(r.out);
  REQUIRE(j["facet_count"] == 36);
  REQUIRE(j["formula"] == 36);

  std::string dot_path = "/tmp/twodet_test_h63.dot";
  RunResult rp = run_cli("poset --c 6 --d 3 --dot " + dot_path);
  REQUIRE(rp.exit_code == 0);
  json jp = json::parse(rp.out);
  REQUIRE(jp["node_count"] == 19);
  REQUIRE(jp["minimal"] == "(1^3;4)");
  std::ifstream dot(dot_path);
  REQUIRE(dot.good());
  std::string content((std::istreambuf_iterator<char>(dot)), std::istreambuf_iterator<char>());
  REQUIRE(content.find("(3,2^2;∅)") != std::string::npos);
}

TEST_CASE("complex census variants: fvector, cm, betti", "[cli]") {
  RunResult fv = run_cli("complex --which F --d 1 --e 3 fvector");
  REQUIRE(fv.exit_code == 0);
  REQUIRE(fv.out.find("dimension,count") == 0);
  REQUIRE(fv.out.find("multiplicity=2") != std::string::npos);  // Catalan(2)

  RunResult cm = run_cli("complex --which F --d 1 --e 3 cm");
  REQUIRE(cm.exit_code == 0);
  json jc = json::parse(cm.out);
  REQUIRE(jc["cohen_macaulay_rational"] == true);
  REQUIRE(jc["cohen_macaulay_f2"] == true);

  RunResult bt = run_cli("complex --which F --d 1 --e 3 betti");
  REQUIRE(bt.exit_code == 0);
  REQUIRE(bt.out.find("0\t2\t1") != std::string::npos);  // the single quadric
}

TEST_CASE("environment overrides select the field", "[cli]") {
  std::string cmd = std::string("TWODET_FIELD=fp:7 ") + TWODET_CLI_PATH +
                    " relations --d 1 --e 3 --family PLU 2>/dev/null";
  std::array<char, 4096> buf{};
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  pclose(pipe);
  json j = json::parse(out);
  // -1 is printed as the residue 6 over F_7
  REQUIRE(j["relations"][0]["polynomial"].get<std::string>().find("6*T[1,3]*T[2,4]") !=
          std::string::npos);
}

TEST_CASE("family subcommand reports flatness", "[cli]") {
  RunResult r = run_cli(
      "family --move peel --lambda 2,1 --mu 1 --eigenvalues 7 --j 1 --eps 1 --samples 0,1,2 "
      "--bound 5");
  REQUIRE(r.exit_code == 0);
  json j = json::parse(r.out);
  REQUIRE(j["hilbert_functions_agree"] == true);
  REQUIRE(j["types_match_claims"] == true);
  REQUIRE(j["source"] == "(2,1;1)");
}

TEST_CASE("invariants subcommand", "[cli]") {
  RunResult r = run_cli("invariants --c 4 --d 1");
  REQUIRE(r.exit_code == 0);
  json j = json::parse(r.out);
  REQUIRE(j["ok"] == true);
  REQUIRE(j["rees"]["formula_mult"] == 36);
}

TEST_CASE("golden files pin the report formats", "[cli]") {
  auto golden = [](const std::string& name) {
    std::ifstream f(std::string(TWODET_GOLDEN_DIR) + "/" + name);
    REQUIRE(f.good());
    return std::string((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
  };
  REQUIRE(run_cli("complex --which F --d 2 --e 2 facets").out ==
          golden("complex_F_2_2_facets.json"));
  REQUIRE(run_cli("--field rational relations --d 0 --e 4 --family LAP").out ==
          golden("relations_0_4_LAP.json"));
  REQUIRE(run_cli("poset --c 4 --d 2").out == golden("poset_4_2.json"));
}

TEST_CASE("degree cap from the environment propagates as exit code 4", "[cli]") {
  std::string cmd = std::string("TWODET_DEGREE_CAP=2 ") + TWODET_CLI_PATH +
                    " kernel --d 1 --e 3 --fiber > /dev/null 2>&1";
  int status = std::system(cmd.c_str());
  REQUIRE(WEXITSTATUS(status) == 4);
}

TEST_CASE("byte-identical output across repeated runs", "[cli]") {
  for (std::string args : {std::string("relations --d 1 --e 4"),
                           std::string("poset --c 5 --d 2"),
                           std::string("complex --which F --d 1 --e 4 facets"),
                           std::string("gb-verify --d 1 --e 3 --rees --log")}) {
    RunResult a = run_cli(args);
    RunResult b = run_cli(args);
    REQUIRE(a.exit_code == b.exit_code);
    REQUIRE(a.out == b.out);
  }
}
