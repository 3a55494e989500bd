#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "coxlab/cli.hpp"
#include "coxlab/identities.hpp"

using namespace coxlab;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("verify prints a passing JSON report") {
  const auto r = call({"verify", "chain-number", "A3"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["identity"] == "chain-number");
  CHECK(j["lhs"] == "16");
  CHECK(j["rhs"] == "16");
  CHECK(j["pass"] == true);
  CHECK(j["millis"].is_null());
}

TEST_CASE("direct commands") {
  CHECK(call({"laplacian", "charpoly", "A3"}).out == "t^3 + 12 t^2 + 48 t + 64\n");
  CHECK(call({"nc", "zeta", "A2", "--k", "2"}).out == "12\n");
  const auto info = nlohmann::json::parse(call({"group", "info", "H3"}).out);
  CHECK(info["order"] == 120);
  CHECK(info["degrees"][0] == nlohmann::json({2, 6, 10}));
}

TEST_CASE("exit codes") {
  CHECK(call({"verify", "chain-number", "Q7"}).code == 2);
  CHECK(call({"verify", "no-such-identity", "A3"}).code == 2);
  CHECK(call({"frobnicate"}).code == 2);
  CHECK(call({"group", "info", "E6"}).code == 2);
  CHECK(call({"verify", "fr1", "A2xA1"}).code == 2);
  CHECK(call({"--format", "table", "verify", "kreweras", "B2"}).code == 0);
}

TEST_CASE("output is deterministic") {
  const std::vector<std::string> args = {"suite", "all", "--types", "A2", "B2", "--jobs", "2"};
  const auto a = call(args);
  const auto b = call(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("hurwitz export writes text and JSON") {
  const auto dir = std::filesystem::temp_directory_path() / "coxlab_cli_test";
  std::filesystem::create_directories(dir);
  const auto path = (dir / "a2.txt").string();
  CHECK(call({"hurwitz", "export", "A2", "--out", path}).code == 0);
  std::ifstream text(path);
  std::stringstream body;
  body << text.rdbuf();
  CHECK(body.str().find("words: 3") != std::string::npos);
  std::ifstream mirror(path + ".json");
  CHECK(nlohmann::json::parse(mirror)["count"] == 3);
  std::filesystem::remove_all(dir);
}

TEST_CASE("parabolic chain numbers") {
  const RootSystem rs = build_root_system("A3");
  CHECK(parabolic_chain_number(rs, rs.all()) == 16);
  CHECK(parabolic_chain_number(rs, rs.closure(RootSet::single(0) | RootSet::single(1))) == 3);
  // A1 x A1: two shuffles
  CHECK(parabolic_chain_number(rs, RootSet::single(0) | RootSet::single(2)) == 2);
}

TEST_CASE("reducible chain numbers") {
  for (const auto& [type, mc] : std::vector<std::pair<const char*, const char*>>{
           {"A1xA1", "2"}, {"A2xA1", "9"}, {"A2xB2", "72"}}) {
    CAPTURE(type);
    TypeContext ctx(type);
    const auto r = check_chain_number(ctx);
    CHECK(r.pass);
    CHECK(r.lhs == mc);
  }
}

TEST_CASE("every identity passes on B3") {
  TypeContext ctx("B3");
  for (const auto& id : identity_names()) {
    CAPTURE(id);
    if (not_applicable(id, ctx)) continue;
    CHECK(run_identity(id, ctx).pass);
  }
}
