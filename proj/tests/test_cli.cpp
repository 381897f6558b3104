#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "incexc/serialize.hpp"

using incexc::io::json;
namespace cli = incexc::cli;

namespace {

std::string data(const std::string& name) { return std::string(INCEXC_DATA_DIR) + "/" + name; }

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "incexc");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::main_entry(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string scratch(const std::string& name, const std::string& contents) {
  const auto path = std::filesystem::temp_directory_path() / ("incexc_cli_" + name);
  std::ofstream(path) << contents;
  return path.string();
}

}  // namespace

TEST_CASE("sieve on two events") {
  const auto o = invoke({"--json", "sieve", data("two_events.json"), "--k", "1"});
  REQUIRE(o.code == cli::kExitOk);
  const auto j = json::parse(o.out);
  CHECK(j["sieve"]["skn"][0] == "4/3");
  CHECK(j["sieve"]["skn"][1] == "1/3");
  CHECK(j["sieve"]["union"] == "1");
  CHECK(j["identity"]["equal"] == true);

  const auto text = invoke({"sieve", data("two_events.json")});
  CHECK(text.code == cli::kExitOk);
  CHECK(text.out.find("identity      lhs = 1, rhs = 1: OK") != std::string::npos);
}

TEST_CASE("atoms signatures are 1-based") {
  const auto o = invoke({"--json", "atoms", data("two_events.json")});
  REQUIRE(o.code == cli::kExitOk);
  const auto j = json::parse(o.out);
  bool saw_both = false;
  for (const auto& cell : j["cells"]) {
    if (cell["signature"] == json::array({1, 2})) {
      saw_both = true;
      CHECK(cell["weight"] == "1/3");
    }
  }
  CHECK(saw_both);
  CHECK(j["t"] == json::array({"0", "2/3", "1/3"}));
}

TEST_CASE("moments, bracket, check on pmf inputs") {
  const auto m = invoke({"--json", "moments", data("explicit_0_3.json"), "--k-max", "4"});
  REQUIRE(m.code == cli::kExitOk);
  CHECK(json::parse(m.out)["s"] == json::array({"1", "3/2", "3/2", "1/2", "0"}));

  const auto b = invoke({"--json", "bracket", data("explicit_0_3.json"), "--k", "1", "--d", "0", "--r", "0"});
  REQUIRE(b.code == cli::kExitOk);
  const auto bj = json::parse(b.out);
  CHECK(bj["lower"] == "0");
  CHECK(bj["upper"] == "3/2");
  CHECK(bj["target"] == "tail");

  const auto e = invoke({"--json", "bracket", data("geometric_2_5.json"), "--k", "1", "--eps", "1e-9"});
  REQUIRE(e.code == cli::kExitOk);
  const auto ej = json::parse(e.out);
  CHECK(ej["certified"] == true);
  CHECK(incexc::io::parse_rat(ej["lower"], "lower") <= incexc::Rat(2) / incexc::Rat(5));
  CHECK(incexc::io::parse_rat(ej["upper"], "upper") >= incexc::Rat(2) / incexc::Rat(5));

  const auto c = invoke({"--json", "check", data("geometric_3_5.json"), "--k", "1"});
  REQUIRE(c.code == cli::kExitOk);
  CHECK(json::parse(c.out)["exact_condition"]["status"] == "certified_diverges");
}

TEST_CASE("exit codes") {
  CHECK(invoke({"bracket", data("geometric_3_5.json"), "--k", "1", "--eps", "1e-3"}).code == cli::kExitComputation);
  CHECK(invoke({"sieve", data("two_events.json"), "--bogus"}).code == cli::kExitValidation);
  CHECK(invoke({"sieve", data("does_not_exist.json")}).code == cli::kExitValidation);
  CHECK(invoke({"sieve", data("two_events.json"), "--k", "0", "--d", "0"}).code == cli::kExitComputation);
  CHECK(invoke({"bracket", data("explicit_0_3.json"), "--eps", "1e-3", "--d", "1"}).code == cli::kExitValidation);
  CHECK(invoke({"bracket", data("geometric_2_5.json"), "--eps", "1e-30", "--max-terms", "20"}).code ==
        cli::kExitResource);

  const auto unnormalized = scratch("unnorm.json", R"({"pmf": {"kind": "explicit", "weights": ["1/2", "1/3"]}})");
  const auto o = invoke({"moments", unnormalized});
  CHECK(o.code == cli::kExitValidation);
  CHECK(o.err.find("NotNormalized") != std::string::npos);

  const auto unknown = scratch("unknown.json", R"({"pmf": {"kind": "geometric", "p": "1/2", "q": 3}})");
  CHECK(invoke({"moments", unknown}).code == cli::kExitValidation);

  std::string many = R"({"space": {"weights": ["1"]}, "events": [)";
  for (int i = 0; i < 25; ++i) many += std::string(i ? "," : "") + "[0]";
  many += "]}";
  CHECK(invoke({"sieve", scratch("many.json", many)}).code == cli::kExitResource);
  CHECK(invoke({"--max-events", "30", "sieve", scratch("many.json", many)}).code == cli::kExitOk);
}

TEST_CASE("gen output is a valid, deterministic input") {
  const auto a = invoke({"gen", "--atoms", "8", "--events", "5", "--seed", "42"});
  const auto b = invoke({"gen", "--atoms", "8", "--events", "5", "--seed", "42"});
  REQUIRE(a.code == cli::kExitOk);
  CHECK(a.out == b.out);
  const auto doc = incexc::io::parse_input_text(a.out);
  REQUIRE(doc.family);
  CHECK(doc.family->size() == 5);
  const auto path = scratch("gen.json", a.out);
  CHECK(invoke({"sieve", path}).code == cli::kExitOk);
  CHECK(invoke({"atoms", path}).code == cli::kExitOk);
}
