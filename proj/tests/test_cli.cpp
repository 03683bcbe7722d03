#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include "u3alg/cli.hpp"

using nlohmann::json;
namespace cli = u3alg::cli;

namespace {

struct Outcome {
  int code = 0;
  std::string out, err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  Outcome o;
  o.code = cli::run(args, out, err);
  o.out = out.str();
  o.err = err.str();
  return o;
}

}  // namespace

TEST_CASE("dimension rows") {
  const auto o = run({"dimension", "--g", "1..3", "--window", "4"});
  REQUIRE(o.code == cli::kExitPass);
  const json doc = json::parse(o.out);
  REQUIRE(doc["records"].size() == 3);
  const long counts[] = {1, 9, 25};
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(doc["records"][i]["count"] == counts[i]);
    CHECK(doc["records"][i]["match"] == true);
  }
  CHECK(doc["pass"] == true);
}

TEST_CASE("euler and spectrum") {
  const auto e = run({"euler", "--group", "2", "--N", "3"});
  REQUIRE(e.code == cli::kExitPass);
  const json doc = json::parse(e.out);
  CHECK(doc["records"][0]["orbit"] == 4);
  CHECK(doc["records"][0]["direct"] == 4);

  const auto s = run({"spectrum", "--g", "1", "--d", "1"});
  REQUIRE(s.code == cli::kExitPass);
  CHECK(json::parse(s.out)["records"].size() == 3);
}

TEST_CASE("alexander and series") {
  const auto a = run({"alexander", "--delta", "1,-1,1", "--conjectural"});
  CHECK(a.code == cli::kExitPass);
  const auto s = run({"series", "--kind", "elliptic", "--g", "1..3"});
  CHECK(s.code == cli::kExitPass);
  const auto r = run({"relations", "--g", "1", "--order", "5"});
  CHECK(r.code == cli::kExitPass);
}

TEST_CASE("invalid parameters exit 2") {
  CHECK(run({}).code == cli::kExitUsage);
  CHECK(run({"spectrum", "--g", "1", "--d", "3"}).code == cli::kExitUsage);
  CHECK(run({"dimension", "--g", "3..1"}).code == cli::kExitUsage);
  CHECK(run({"euler"}).code == cli::kExitUsage);
  CHECK(run({"alexander", "--delta", "1,1"}).code == cli::kExitUsage);
  CHECK(run({"series", "--kind", "bogus"}).code == cli::kExitUsage);
  CHECK(run({"euler", "--group", "2", "--format", "xml"}).code == cli::kExitUsage);
  CHECK(run({"nonsense"}).code == cli::kExitUsage);
  const auto o = run({"relations", "--N", "1"});
  CHECK(o.code == cli::kExitUsage);
  CHECK(o.err.find("--N") != std::string::npos);
  CHECK(run({"--help"}).code == cli::kExitPass);
}

TEST_CASE("a failed check exits 1 with the identity") {
  // g=2 needs window 1; capping at 0 leaves the bound unconfirmed.
  const auto o = run({"dimension", "--g", "2", "--window", "0", "--max-window", "0"});
  CHECK(o.code == cli::kExitCheckFailed);
  const json doc = json::parse(o.out);
  REQUIRE(doc["failures"].size() == 1);
  CHECK(doc["failures"][0]["identity"] == "standard-monomial census equals (2g-1)^2");
  CHECK(doc["failures"][0]["inputs"]["g"] == 2);
  CHECK(doc["pass"] == false);

  const auto c = run({"dimension", "--g", "2", "--window", "0", "--max-window", "0", "--format", "csv"});
  CHECK(c.code == cli::kExitCheckFailed);
  CHECK(c.err.find("\"failure\"") != std::string::npos);
}

TEST_CASE("output is deterministic") {
  const std::vector<std::string> args = {"dimension", "--g", "1..2"};
  CHECK(run(args).out == run(args).out);
  const std::vector<std::string> sargs = {"series", "--kind", "blowup", "--order", "4"};
  CHECK(run(sargs).out == run(sargs).out);
}

TEST_CASE("csv output") {
  const auto o = run({"spectrum", "--g", "1", "--d", "1", "--format", "csv"});
  REQUIRE(o.code == cli::kExitPass);
  std::istringstream in(o.out);
  std::string header;
  std::getline(in, header);
  for (const char* key : {"alpha2_0", "alpha2_1", "alpha2_2", "alpha2_3"}) CHECK(header.find(key) != std::string::npos);
  CHECK(header.find("alpha2_4") == std::string::npos);
  std::size_t rows = 0;
  for (std::string line; std::getline(in, line);)
    if (!line.empty()) ++rows;
  CHECK(rows == 3);
}

TEST_CASE("range parsing") {
  CHECK(cli::parse_range("1..3") == std::pair{1, 3});
  CHECK(cli::parse_range("4") == std::pair{4, 4});
  CHECK_THROWS_AS(cli::parse_range("3..1"), std::invalid_argument);
  CHECK_THROWS_AS(cli::parse_range("a..b"), std::invalid_argument);
  CHECK_THROWS_AS(cli::parse_range("1..2x"), std::invalid_argument);
}
