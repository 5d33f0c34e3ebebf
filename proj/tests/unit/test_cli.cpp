#include <doctest.h>

#include <fstream>

#include "catmates/cli.hpp"

using namespace catmates;
using catmates::io::Json;

namespace {

std::string write_c2() {
  auto p = std::filesystem::temp_directory_path() / "catmates_cli_c2.json";
  std::ofstream(p) << R"({"schema":"fincat/1","name":"C2","objects":["0","1"],
    "morphisms":[{"id":"id0","src":"0","tgt":"0"},{"id":"id1","src":"1","tgt":"1"},
                 {"id":"le","src":"0","tgt":"1"}],
    "identities":{"0":"id0","1":"id1"},
    "composition":[["id0","id0","id0"],["id1","id1","id1"],["le","id0","le"],["id1","le","le"]]})";
  return p.string();
}

}  // namespace

TEST_CASE("cli: help exits 0 and usage errors exit 2") {
  auto h = cli::run({"--help"});
  CHECK(h.exit_code() == 0);
  CHECK(h.output.find("cyclic-check") != std::string::npos);
  auto u = cli::run({"frobnicate"});
  CHECK(u.exit_code() == 2);
  CHECK(u.payload.at("code") == "UsageError");
  CHECK(cli::run({}).exit_code() == 2);
}

TEST_CASE("cli: validate renders the payload and is deterministic") {
  const auto file = write_c2();
  auto a = cli::run({"validate", file});
  auto b = cli::run({"validate", file});
  REQUIRE(a.exit_code() == 0);
  CHECK(a.output == b.output);
  CHECK(Json::parse(a.output) == a.payload);
  CHECK(a.payload.begin().key() == "status");
  CHECK(a.payload.at("objects") == 2);
  auto t = cli::run({"--out", "text", "validate", file});
  CHECK(t.output.find("violations: 0") != std::string::npos);
}

TEST_CASE("cli: an unknown file is a parse error") {
  auto r = cli::run({"validate", "/nonexistent/catmates.json"});
  CHECK(r.status == cli::Status::Error);
  CHECK(r.payload.at("code") == "ParseError");
}
