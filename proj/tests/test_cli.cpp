#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "rcomm/cli.hpp"

using namespace rcomm;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<const char*> args) {
  args.insert(args.begin(), "rcomm_verify");
  std::ostringstream out, err;
  int code = cli_main(int(args.size()), args.data(), out, err);
  return {code, out.str(), err.str()};
}

std::vector<nlohmann::json> json_lines(const std::string& text) {
  std::vector<nlohmann::json> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(nlohmann::json::parse(line));
  return out;
}

}  // namespace

TEST_CASE("usage errors exit with 2") {
  CHECK(invoke({"--n", "7"}).code == kExitUsage);
  CHECK(invoke({"--n", "2"}).code == kExitUsage);
  CHECK(invoke({"--jobs", "0"}).code == kExitUsage);
  CHECK(invoke({"--suite", "nonsense"}).code == kExitUsage);
  CHECK(invoke({"--bogus"}).code == kExitUsage);
  CHECK(invoke({"--n", "three"}).code == kExitUsage);
  CHECK(invoke({"--trials", "0"}).code == kExitUsage);
  CHECK(invoke({"--n", "9", "--allow-large-n"}).code == kExitUsage);
  CHECK_FALSE(invoke({"--n", "7"}).err.empty());
}

TEST_CASE("validate") {
  RunConfig c;
  CHECK_NOTHROW(validate(c));
  c.n = 6;
  CHECK_THROWS_AS(validate(c), UsageError);
  c.allow_large_n = true;
  CHECK_NOTHROW(validate(c));
}

TEST_CASE("weyl self-tests hold") {
  for (const auto& id : weyl_self_tests()) CHECK(holds(id));
}

TEST_CASE("o2n run in json: one object per line and a final summary") {
  Result r = invoke({"--suite", "o2n", "--n", "3", "--json", "--jobs", "2"});
  CHECK(r.code == kExitPass);
  auto lines = json_lines(r.out);
  REQUIRE(lines.size() > 100);
  for (std::size_t k = 0; k + 1 < lines.size(); ++k) {
    CHECK(lines[k].contains("suite"));
    CHECK(lines[k].contains("relation"));
    CHECK(lines[k]["passed"] == true);
  }
  const auto& last = lines.back();
  CHECK(last["summary"] == true);
  CHECK(last["failed"] == 0);
  CHECK(last["total"] == lines.size() - 1);
  CHECK(lines.front()["suite"] == "weyl");
}

TEST_CASE("report order does not depend on jobs") {
  auto strip = [](const std::string& text) {
    std::vector<std::string> keys;
    for (auto& j : json_lines(text)) {
      j.erase("ms");
      keys.push_back(j.dump());
    }
    return keys;
  };
  Result one = invoke({"--suite", "racah,oracle", "--json", "--jobs", "1", "--trials", "2"});
  Result three = invoke({"--suite", "racah,oracle", "--json", "--jobs", "3", "--trials", "2"});
  CHECK(one.code == kExitPass);
  CHECK(strip(one.out) == strip(three.out));
}

TEST_CASE("racah at n = 5 includes 7e") {
  Result r = invoke({"--suite", "racah", "--n", "5", "--json"});
  CHECK(r.code == kExitPass);
  std::size_t e7 = 0;
  for (const auto& j : json_lines(r.out)) e7 += j.contains("relation") && j["relation"] == "7e";
  CHECK(e7 == 120);
}

TEST_CASE("all suites at n = 3 pass") {
  Result r = invoke({"--suite", "all", "--n", "3", "--trials", "3"});
  CHECK(r.code == kExitPass);
  CHECK(r.out.find("FAIL") == std::string::npos);
  CHECK(r.out.find("oracle leibniz") != std::string::npos);
}

TEST_CASE("operators can be emitted") {
  Result r = invoke({"--suite", "reduction", "--emit-operators"});
  CHECK(r.code == kExitPass);
  CHECK(r.out.find("Q_12 = ") != std::string::npos);
  CHECK(r.out.find("C_total = ") != std::string::npos);
}
