#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "charcol/cli.hpp"

using namespace charcol;
using Json = nlohmann::ordered_json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("column") {
  auto r = call({"column", "--class", "[3]", "--n", "6", "--paper-order"});
  REQUIRE(r.code == kExitOk);
  auto j = Json::parse(r.out);
  CHECK(j["class"] == "[3,1,1,1]");
  std::vector<long> values;
  for (auto& pair : j["values"]) values.push_back(pair[1].get<long>());
  CHECK(values == std::vector<long>{1, 2, 0, 1, -1, -2, -1, 1, 0, 2, 1});

  auto csv = call({"column", "--class", "[1]", "--n", "3", "--format", "csv"});
  CHECK(csv.out == "label,value\n\"[3]\",1\n\"[2,1]\",2\n\"[1,1,1]\",1\n");

  auto odd = call({"column", "--class", "[2]", "--n", "5", "--odd", "--format", "csv"});
  auto plain = call({"column", "--class", "[2]", "--n", "5", "--format", "csv"});
  auto oracle = call({"column", "--class", "[2]", "--n", "5", "--oracle", "--format", "csv"});
  CHECK(odd.out == plain.out);
  // One extra column with the Murnaghan-Nakayama value.
  std::istringstream rows(oracle.out);
  std::string row;
  std::getline(rows, row);
  CHECK(row == "label,value,oracle");
  while (std::getline(rows, row)) {
    auto last = row.rfind(',');
    auto mid = row.rfind(',', last - 1);
    CHECK(row.substr(mid + 1, last - mid - 1) == row.substr(last + 1));
  }
}

TEST_CASE("column on the Z2 wreath chain") {
  auto r = call({"--chain", "z2wreath", "column", "--class", "e", "--n", "2", "--format", "csv"});
  REQUIRE(r.code == kExitOk);
  CHECK(r.out == "label,value\n\"1:[2]\",1\n\"1:[1,1]\",1\n\"1:[1];-1:[1]\",2\n\"-1:[2]\",1\n\"-1:[1,1]\",1\n");
}

TEST_CASE("column with a supplied table") {
  auto table = call({"--chain", "z2wreath", "table", "--k", "2"});
  REQUIRE(table.code == kExitOk);
  std::string path = "test_cli_table.json";
  std::ofstream(path) << table.out;
  auto with = call({"--chain", "z2wreath", "--max-order", "4", "column", "--class", "-1:[2]", "--n", "4", "--k", "2",
                    "--table", path});
  auto without = call({"--chain", "z2wreath", "column", "--class", "-1:[2]", "--n", "4"});
  std::remove(path.c_str());
  CHECK(with.code == kExitOk);
  CHECK(with.out == without.out);
}

TEST_CASE("lift, indres, mckay, table") {
  auto lift = call({"lift", "--k", "5", "--label", "[3,2]", "--n", "9"});
  CHECK(Json::parse(lift.out) == Json::parse(R"({"[9]": 10, "[8,1]": -4, "[7,2]": 1})"));
  auto first = call({"lift", "--k", "3", "--label", "[1,1,1]", "--n", "4", "--policy", "first-row"});
  CHECK(first.code == kExitOk);
  CHECK(call({"lift", "--k", "3", "--label", "[1,1,1]", "--n", "4", "--policy", "sideways"}).code == kExitUsage);

  auto ir = call({"indres", "--n", "2"});
  CHECK(ir.out == "[2]: 1 1\n[1,1]: 1 1\n");
  auto dump = Json::parse(call({"indres", "--n", "2", "--dump"}).out);
  CHECK(dump["entries"].size() == 4);

  auto dot = call({"mckay", "--n", "2"});
  CHECK(dot.out.rfind("graph mckay {", 0) == 0);
  auto js = Json::parse(call({"mckay", "--n", "3", "--format", "json"}).out);
  CHECK(js["basis"].size() == 3);

  auto t = Json::parse(call({"table", "--k", "3"}).out);
  CHECK(t["name"] == "S3");
  CHECK(t["order"] == 6);
}

TEST_CASE("verify") {
  auto r = call({"verify", "--suite", "all", "--maxN", "4"});
  CHECK(r.code == kExitOk);
  CHECK(Json::parse(r.out)["pass"] == true);

  std::string path = "test_cli_chain.json";
  CHECK(call({"verify", "--suite", "heisenberg", "--maxN", "3", "--export", path}).code == kExitOk);
  auto ingested = call({"--chain", path, "verify", "--suite", "all", "--maxN", "3"});
  CHECK(ingested.code == kExitOk);

  // Zero out a Res row: ingestion must refuse the file.
  Json j;
  std::ifstream(path) >> j;
  j["levels"][3]["res"] = Json::array({Json::array({0, 0, 1}), Json::array({0, 1, 1})});
  std::ofstream(path) << j.dump();
  auto broken = call({"--chain", path, "verify"});
  std::remove(path.c_str());
  CHECK(broken.code == kExitVerificationFailed);
  CHECK(broken.err.find("not a surjective chain") != std::string::npos);
}

TEST_CASE("usage errors and bounds") {
  CHECK(call({}).code == kExitUsage);
  CHECK(call({"frob"}).code == kExitUsage);
  CHECK(call({"--chain", "bogus", "column", "--class", "[1]", "--n", "2"}).code == kExitUsage);
  CHECK(call({"column", "--class", "[7]", "--n", "3"}).code == kExitUsage);
  CHECK(call({"column", "--class", "[1]"}).code == kExitUsage);
  CHECK(call({"column", "--class", "[2,x]", "--n", "3"}).code == kExitUsage);
  CHECK(call({"--chain", "z2wreath", "column", "--class", "1:[2]", "--n", "3", "--odd"}).code == kExitUsage);
  CHECK(call({"--chain", "z2wreath", "mckay", "--n", "2", "--reduced"}).code == kExitUsage);
  auto bound = call({"--chain", "z2wreath", "--max-order", "10", "table", "--k", "3"});
  CHECK(bound.code == kExitResourceBound);
  CHECK(bound.err.find("48") != std::string::npos);
  // The override does not leak into later runs.
  CHECK(call({"--chain", "z2wreath", "table", "--k", "3"}).code == kExitOk);
}

TEST_CASE("--out writes a file") {
  std::string path = "test_cli_out.txt";
  auto r = call({"--out", path, "indres", "--n", "2"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.empty());
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  std::remove(path.c_str());
  CHECK(ss.str() == "[2]: 1 1\n[1,1]: 1 1\n");
}

TEST_CASE("the built binary reports exit statuses") {
  auto status = [](const std::string& args) {
    int raw = std::system((std::string(CHARCOL_CLI_PATH) + " " + args + " > /dev/null 2>&1").c_str());
    return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  };
  CHECK(status("column --class '[3]' --n 6") == 0);
  CHECK(status("column --class '[3]'") == 2);
  CHECK(status("--chain z2wreath --max-order 10 table --k 3") == 3);
}
