#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "persist/cli.hpp"

using persist::cli::run;
using Json = nlohmann::json;

namespace {

Json run_json(std::vector<std::string> args, int expected_exit = 0) {
  const auto r = run(args);
  CHECK(r.exit_code == expected_exit);
  return Json::parse(r.payload);
}

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("pn") {
  const auto j = run_json({"pn", "--a", "3", "--theta", "1", "--n", "4"});
  CHECK(j["a"] == "3");
  CHECK(j["theta"] == "1");
  CHECK(j["entries"][4]["p"] == "1/120");
  CHECK(j["entries"][4]["p_float"].get<double>() == doctest::Approx(1.0 / 120));
  CHECK(j["entries"].size() == 5);
}

TEST_CASE("pn modes agree") {
  for (const char* mode : {"formula", "recurrence", "combinatorial", "oracle"}) {
    const auto j = run_json({"pn", "--a", "1/2", "--theta", "-1/2", "--n", "3", "--mode", mode});
    CHECK(j["mode"] == mode);
    CHECK(j["entries"][3]["p"] == "737/1536");
  }
  const auto dual = run_json({"pn", "--a", "2", "--theta", "3", "--n", "2", "--mode", "recurrence"});
  CHECK(dual["entries"][2]["p"] == run_json({"pn", "--a", "1/2", "--theta", "1/3", "--n", "2"})["entries"][2]["p"]);
  const auto mc = run_json({"pn", "--a", "1", "--theta", "1/2", "--n", "1", "--mode", "mc", "--samples", "20000",
                            "--seed", "5"});
  CHECK(mc["entries"][1].contains("mean"));
  CHECK(mc["entries"][1].contains("stderr"));
  CHECK(!mc["entries"][1].contains("p"));
  run_json({"pn", "--a", "-1/4", "--theta", "1/2", "--n", "2", "--mode", "recurrence"}, 2);
  run_json({"pn", "--a", "1", "--theta", "1/2", "--n", "12", "--mode", "oracle"}, 2);
  run_json({"pn", "--a", "1", "--theta", "1/2", "--n", "2", "--mode", "bogus"}, 2);
}

TEST_CASE("decimal input is exact") {
  const auto j = run_json({"classify", "--a", "0.25", "--theta", "-0.5"});
  CHECK(j["a"] == "1/4");
  CHECK(j["theta"] == "-1/2");
  CHECK(j["canonical"] == "Yellow");
}

TEST_CASE("classify") {
  const auto j = run_json({"classify", "--a", "-1/2", "--theta", "3"});
  CHECK(j["canonical"] == "ZeroTail");
  CHECK(j["dual_target"].is_null());
  const auto d = run_json({"classify", "--a", "2", "--theta", "3"});
  CHECK(d["canonical"] == "DualPositive");
  CHECK(d["dual_target"]["a"] == "1/2");
  CHECK(d["dual_target"]["theta"] == "1/3");
}

TEST_CASE("verify") {
  const auto r = run({"verify", "--a", "-1/4", "--theta", "1/2", "--n", "6"});
  CHECK(r.exit_code == 0);
  const auto j = Json::parse(r.payload);
  CHECK(j["discrepancy"].size() == 7);
  for (const auto& d : j["discrepancy"]) CHECK(d == "0");
  CHECK(j["ok"] == true);
  for (auto args : std::vector<std::vector<std::string>>{{"--a", "1/2", "--theta", "1/2"},
                                                         {"--a", "3", "--theta", "-1/2"},
                                                         {"--a", "1", "--theta", "2"},
                                                         {"--a", "0", "--theta", "1"},
                                                         {"--a", "-1/4", "--theta", "2"}}) {
    args.insert(args.begin(), "verify");
    args.insert(args.end(), {"--n", "5"});
    const auto v = run_json(args);
    CHECK(v["max_discrepancy"] == "0");
    CHECK(v["reference"] == "oracle");
  }
}

TEST_CASE("gf, exponent, phi, mallows") {
  const auto gf = run_json({"gf", "--a", "-1/4", "--theta", "1/2", "--order", "3"});
  CHECK(gf["coefficients"] == Json::array({"1", "8/9", "7/9", "55/81"}));
  CHECK(gf["method"] == "orange_gf");
  const auto ex = run_json({"exponent", "--a", "2", "--theta", "0"});
  CHECK(ex["kind"] == "RootOfE");
  CHECK(ex["z0_exact"] == "3");
  CHECK(ex["lambda_exact"] == "1/3");
  CHECK(ex["constant"].get<double>() == doctest::Approx(9));
  const auto nf = run_json({"exponent", "--a", "-1/4", "--theta", "2", "--tol", "1e-9"});
  CHECK(nf["kind"] == "Superexponential");
  CHECK(run_json({"phi", "--ell", "3"})["phi"] == "-1 + theta - 1/6*theta^3");
  CHECK(run_json({"phi", "--ell", "3"})["monomials"] == 3);
  CHECK(run_json({"phi", "--ell", "3", "--theta", "1"})["value"] == "-1/6");
  CHECK(run_json({"mallows", "--n", "3"})["J"] == "2 + theta");
  run_json({"mallows", "--n", "0"}, 2);
}

TEST_CASE("bad input exits 2 with a one-line error") {
  for (const auto& args : std::vector<std::vector<std::string>>{{"pn", "--a", "-2", "--theta", "1", "--n", "2"},
                                                              {"pn", "--a", "x", "--theta", "1", "--n", "2"},
                                                              {"pn", "--theta", "1", "--n", "2"},
                                                              {"nosuch"},
                                                              {}}) {
    const auto r = run(args);
    CHECK(r.exit_code == 2);
    CHECK(std::count(r.payload.begin(), r.payload.end(), '\n') == 1);
    CHECK(Json::parse(r.payload).contains("error"));
  }
}

TEST_CASE("output is byte-stable") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"pn", "--a", "1/4", "--theta", "-1/2", "--n", "6", "--mode", "mc", "--samples", "50000", "--seed", "9"},
           {"exponent", "--a", "1", "--theta", "1/2"},
           {"verify", "--a", "2", "--theta", "-1/2", "--n", "4"},
           {"pn", "--a", "1/2", "--theta", "3/4", "--n", "5", "--pretty"}}) {
    CHECK(run(args).payload == run(args).payload);
  }
}

TEST_CASE("pretty table") {
  const auto r = run({"pn", "--a", "1/4", "--theta", "-1/2", "--n", "1", "--pretty"});
  CHECK(r.exit_code == 0);
  CHECK(r.payload.find("91/100") != std::string::npos);
  CHECK(r.payload.find('{') == std::string::npos);
}

TEST_CASE("scan writes a sorted CSV grid") {
  const auto dir = std::filesystem::temp_directory_path();
  const auto first = dir / "persist_scan_a.csv", second = dir / "persist_scan_b.csv";
  const std::vector<std::string> base{"scan",        "--a-min", "-1/2", "--a-max", "1", "--theta-min", "-1",
                                      "--theta-max", "2",       "--steps", "3",  "--n", "4"};
  auto args = base;
  args.insert(args.end(), {"--out", first.string()});
  const auto j = run_json(args);
  CHECK(j["rows"] == 16);
  args = base;
  args.insert(args.end(), {"--out", second.string()});
  run_json(args);
  const std::string csv = read_file(first);
  CHECK(csv == read_file(second));
  std::istringstream lines(csv);
  std::string header;
  std::getline(lines, header);
  CHECK(header == "a,theta,region,p1,p2,p3,p4,lambda");
  std::string row;
  std::getline(lines, row);
  CHECK(row.rfind("-0.5,-1,WhiteOne,1,1,1,1,1", 0) == 0);
  int count = 1;
  while (std::getline(lines, row)) ++count;
  CHECK(count == 16);
  std::filesystem::remove(first);
  std::filesystem::remove(second);
  run_json({"scan", "--a-min", "-1", "--a-max", "1", "--theta-min", "0", "--theta-max", "1", "--steps", "2",
            "--n", "2", "--out", (dir / "never.csv").string()},
           2);
}
