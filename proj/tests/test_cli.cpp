#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include "cli.hpp"
#include "fixtures.hpp"
#include "symmaps/map_json.hpp"

using namespace symmaps;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(const std::vector<std::string> &args, const std::string &input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string record_text(const MapRecord &r) { return record_to_json(r).dump(); }

} // namespace

TEST_CASE("series q") {
  const auto r = run({"series", "--name", "q", "--order", "8"});
  REQUIRE(r.code == cli::kOk);
  const auto j = json::parse(r.out);
  CHECK(j["name"] == "q");
  CHECK(j["order"] == 8);
  CHECK(j["coeffs"].back() == "1938");
  CHECK(j["coeffs"][7] == "408");
}

TEST_CASE("series two_point") {
  const auto r = run({"series", "--name", "two_point", "--family", "tri_simple", "--i", "2", "--order", "6"});
  REQUIRE(r.code == cli::kOk);
  const auto j = json::parse(r.out);
  CHECK(j["variable"] == "y");
  CHECK(j["coeffs"] == json::array({"0", "1", "5", "28", "172", "1129", "7782"}));
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run({}).code == cli::kUsage);
  CHECK(run({"series"}).code == cli::kUsage);
  CHECK(run({"series", "--name", "nope"}).code == cli::kUsage);
  CHECK(run({"frobnicate"}).code == cli::kUsage);
  CHECK(run({"enumerate", "--family", "simple_quad", "--size", "9"}).code == cli::kUsage);
  CHECK(run({"render"}, "{not json").code == cli::kUsage);
  const auto r = run({"series", "--name", "nope"});
  CHECK(json::parse(r.err)["error"] == "UnknownName");
}

TEST_CASE("enumerate") {
  const auto c = run({"enumerate", "--family", "simple_quad", "--size", "5", "--count"});
  REQUIRE(c.code == cli::kOk);
  CHECK(json::parse(c.out)["count"] == 22);
  const auto l = run({"enumerate", "--family", "symmetric_quad", "--size", "4"});
  REQUIRE(l.code == cli::kOk);
  std::istringstream lines(l.out);
  std::string line;
  int n = 0;
  while (std::getline(lines, line)) {
    const auto rec = record_from_json(json::parse(line));
    CHECK(rec.k == 2);
    ++n;
  }
  CHECK(n == 3);
}

TEST_CASE("two-point agreement") {
  const auto r = run({"two-point", "--family", "quad", "--i", "2", "--size", "3"});
  REQUIRE(r.code == cli::kOk);
  const auto j = json::parse(r.out);
  CHECK(j["series"] == "15");
  CHECK(j["census"] == 15);
  CHECK(j["agree"] == true);
}

TEST_CASE("quotients round trip") {
  const std::string sym = record_text(record_of(fixtures::symmetric(fixtures::spiked_square(), 2)));
  const auto classic = run({"quotient", "classic"}, sym);
  REQUIRE(classic.code == cli::kOk);
  const auto jc = json::parse(classic.out);
  CHECK(jc["round_trip"] == true);
  const auto un = run({"quotient", "unroll", "--k", "2"}, jc["quotient"].dump());
  REQUIRE(un.code == cli::kOk);
  CHECK(json::parse(un.out)["round_trip"] == true);

  const auto nw = run({"quotient", "new"}, sym);
  REQUIRE(nw.code == cli::kOk);
  const auto jn = json::parse(nw.out);
  CHECK(jn["round_trip"] == true);
  CHECK(jn["quotient"]["marked_edge"].is_number());
  const auto inv = run({"quotient", "new", "--inverse"}, jn["quotient"].dump());
  REQUIRE(inv.code == cli::kOk);
  CHECK(json::parse(inv.out)["round_trip"] == true);

  // Without a stored rotation the order must be given.
  const std::string bare = record_text(record_of(fixtures::spiked_square()));
  CHECK(run({"quotient", "classic"}, bare).code == cli::kUsage);
  CHECK(run({"quotient", "classic", "--k", "2"}, bare).code == cli::kOk);
}

TEST_CASE("orient") {
  const auto r = run({"orient"}, record_text(record_of(fixtures::cube())));
  REQUIRE(r.code == cli::kOk);
  const auto j = json::parse(r.out);
  CHECK(j["feasible"] == true);
  CHECK(j["minimal"] == true);
  CHECK(j["map"]["orient"].size() == 12);
}

TEST_CASE("verify and determinism") {
  const auto a = run({"verify", "--suite", "1,3"});
  const auto b = run({"verify", "--suite", "ac1,ac3", "--jobs", "2"});
  REQUIRE(a.code == cli::kOk);
  const auto j = json::parse(a.out);
  CHECK(j["passed"] == true);
  CHECK(j["checks"].size() == 2);
  CHECK(json::parse(b.out)["checks"] == j["checks"]);
  CHECK(run({"verify", "--suite", "11"}).code == cli::kUsage);
  CHECK(run({"verify", "--max-size", "zero"}).code == cli::kUsage);
}

TEST_CASE("render") {
  const auto r = run({"render"}, record_text(record_of(fixtures::square())));
  REQUIRE(r.code == cli::kOk);
  CHECK(r.out.rfind("<?xml", 0) == 0);
  CHECK(r.out == run({"render"}, record_text(record_of(fixtures::square()))).out);
}
