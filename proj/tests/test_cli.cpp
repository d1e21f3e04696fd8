#include <json.hpp>

#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "doctest.h"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "nildist");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = nildist::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

nlohmann::ordered_json analyze(std::vector<std::string> words) {
  words.insert(words.begin(), "analyze");
  const Result r = run(words);
  REQUIRE(r.code == nildist::cli::kOk);
  return nlohmann::ordered_json::parse(r.out);
}

}  // namespace

TEST_CASE("nf example") {
  const Result r = run({"nf", "-m", "2", "-c", "2", "[a,b]^2 [b,a]"});
  CHECK(r.code == 0);
  CHECK(r.out.find("[a,b]") != std::string::npos);
  CHECK(r.out.find("(0,0,-1)") != std::string::npos);
}

TEST_CASE("arithmetic subcommands") {
  CHECK(run({"mul", "a", "b", "a^-1", "b^-1"}).out == "[a,b]\ncoords (0,0,-1)\n");
  CHECK(run({"comm", "-c", "3", "a", "[a,b]"}).out == "[[b,a],a]\ncoords (0,0,0,1,0)\n");
  CHECK(run({"weight", "-c", "3", "[a,[a,b]]"}).out == "3\n");
  CHECK(run({"weight", "a a^-1"}).out == "inf\n");
  CHECK(run({"coords", "a b a^-1"}).out == "(0,1,-1)\n");
  CHECK(run({"exponent", "-m", "2", "-c", "2", "[a,b]"}).out == "2\n");
  const Result h = run({"hall", "-c", "3"});
  CHECK(h.code == 0);
  CHECK(h.out.find("[[b,a],b]") != std::string::npos);
}

TEST_CASE("analyze report schema") {
  const auto j = analyze({"-m", "2", "-c", "2", "a^2[a,b]^3"});
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  CHECK(j["verdict"] == "undistorted");
  CHECK(j["k"] == 1);
  CHECK(j["hirsch"]["H"] == 1);
  CHECK(j["hirsch"]["rH"] == 1);
  CHECK(j["hirsch"]["F"] == 3);
  CHECK(j["finite_index"] == false);
  CHECK(j["normal"] == false);
  CHECK(j["cyclic_exponent"] == 1);
  CHECK(j["kernel_witness"].is_null());
  CHECK(j["retract"]["kept"] == nlohmann::ordered_json::array({"a"}));
  CHECK(j["retract"]["killed"] == nlohmann::ordered_json::array({"b"}));
  CHECK(j["retract"]["hn"]["hirsch"] == 3);
  CHECK(keys == std::vector<std::string>{"verdict", "k", "hirsch", "finite_index", "normal",
                                         "cyclic_exponent", "kernel_witness", "retract"});
}

TEST_CASE("analyze catalog") {
  const auto central = analyze({"[a,b]"});
  CHECK(central["verdict"] == "distorted");
  CHECK(central["cyclic_exponent"] == 2);
  CHECK(central["kernel_witness"]["weight"] == 2);

  const auto fi = analyze({"a^2", "b", "[a,b]"});
  CHECK(fi["verdict"] == "undistorted");
  CHECK(fi["finite_index"] == true);

  const auto normal = analyze({"a", "[a,b]"});
  CHECK(normal["verdict"] == "distorted");
  CHECK(normal["normal"] == true);
  CHECK(normal["kernel_witness"]["word"] == "[b,a]");
  CHECK(normal["retract"].is_null());

  CHECK(analyze({"1"})["verdict"] == "trivial");
}

TEST_CASE("identical inputs give byte-identical output") {
  const std::vector<std::string> args = {"analyze", "-c", "3", "--seed", "7",
                                         "--tietze-trials", "5", "a^2 b", "[a,b]^3 b^2"};
  const Result first = run(args), second = run(args);
  CHECK(first.code == 0);
  CHECK(first.out == second.out);
  const auto j = nlohmann::json::parse(first.out);
  CHECK(j["tietze"]["verdict_flips"] == 0);
  CHECK(j["tietze"]["seed"] == 7);
  CHECK(nlohmann::ordered_json::parse(first.out).dump(2) + "\n" == first.out);
}

TEST_CASE("measure output") {
  const Result r = run({"measure", "--radius", "4", "[a,b]"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("n,delta,exact\n1,0,true\n2,0,true\n3,0,true\n4,1,true\n", 0) == 0);
  const Result j = run({"measure", "--radius", "6", "--format", "json", "a"});
  CHECK(j.code == 0);
  const auto mj = nlohmann::json::parse(j.out);
  CHECK(mj["rows"].size() == 6);
  CHECK(mj["rows"][5]["delta"] == 6);
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == nildist::cli::kUsage);
  CHECK(run({"bogus"}).code == nildist::cli::kUsage);
  CHECK(run({"nf", "q"}).code == nildist::cli::kUsage);
  CHECK(run({"nf", "a^"}).code == nildist::cli::kUsage);
  CHECK(run({"exponent", "[a,a]"}).code == nildist::cli::kUsage);
  CHECK(run({"nf", "-m", "0", "a"}).code == nildist::cli::kUsage);
  CHECK(run({"nf", "-m", "3", "-c", "9", "a"}).code == nildist::cli::kCapExceeded);
  CHECK(run({"nf", "--hirsch-cap", "2", "a"}).code == nildist::cli::kCapExceeded);
  CHECK(run({"measure", "--radius", "12", "--max-elements", "50", "[a,b]"}).code ==
        nildist::cli::kCapExceeded);
  CHECK(run({"--help"}).code == nildist::cli::kOk);
}
