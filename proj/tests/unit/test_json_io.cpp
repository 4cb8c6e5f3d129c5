#include <doctest.h>

#include <sstream>

#include "helpers.hpp"
#include "torusjet/error.hpp"
#include "torusjet/json_io.hpp"
#include "torusjet/random.hpp"
#include "torusjet/verify.hpp"

using namespace torusjet;
using namespace torusjet::testing;

TEST_SUITE("json_io") {
  TEST_CASE("lattice function round trip") {
    const auto f = alternating();
    const auto j = to_json(f);
    CHECK(j.dump() == R"({"m":[4],"values":[0.0,1.0,0.0,1.0]})");
    const auto g = random_function(LatticeSpec({2, 3}), 3);
    const auto back = function_from_json(to_json(g));
    CHECK(back.spec() == g.spec());
    CHECK(back.values() == g.values());
  }

  TEST_CASE("malformed lattice functions are rejected") {
    CHECK_THROWS_AS(function_from_json(json::parse(R"({"m":[4],"values":[0,1,0]})")), InvalidInput);
    CHECK_THROWS_AS(function_from_json(json::parse(R"({"m":[0],"values":[]})")), InvalidInput);
    CHECK_THROWS_AS(function_from_json(json::parse(R"({"values":[1]})")), InvalidInput);
    CHECK_THROWS_AS(function_from_json(json::parse(R"([1,2])")), InvalidInput);
  }

  TEST_CASE("index keys") {
    CHECK(index_key({}).empty());
    CHECK(index_key({0, 0, 2}) == "1,1,3");
    CHECK(parse_index_key("1,1,3") == MultiIndex{0, 0, 2});
    CHECK(parse_index_key("") == MultiIndex{});
  }

  TEST_CASE("jet round trip") {
    Jet p = Jet::zero({0.0}, 1);
    p.parts[1].set(MultiIndex{0}, 4.0);
    CHECK(to_json(p).dump() == R"({"base":[0.0],"parts":[{"coeffs":{"":0.0},"k":0},{"coeffs":{"1":4.0},"k":1}]})");
    Rng rng(71);
    Jet q = Jet::zero({0.5, -0.25}, 3);
    for (auto& part : q.parts)
      for (const auto& idx : part.sorted_indices()) part.set(idx, rng.uniform(-1, 1));
    const auto back = jet_from_json(to_json(q));
    CHECK(back.base == q.base);
    for (std::size_t s = 0; s < q.parts.size(); ++s) CHECK(max_abs_difference(back.parts[s], q.parts[s]) == 0.0);
  }

  TEST_CASE("seminorm report shape") {
    const auto j = to_json(seminorm(alternating(), 2));
    CHECK(j["k"] == 2);
    CHECK(j["value"] == 32.0);
    CHECK(j["witness_u"].size() == 2);
    CHECK(j["witness_x"].size() == 1);
  }

  TEST_CASE("whitney csv") {
    std::vector<WhitneyRow> rows;
    whitney_check(tent(), 2, JetBuilder::recursive, &rows);
    std::ostringstream out;
    write_whitney_csv(out, rows);
    const auto text = out.str();
    CHECK(text.rfind("condition,x,y,m,direction,quotient\n", 0) == 0);
    CHECK(std::count(text.begin(), text.end(), '\n') == static_cast<long>(rows.size()) + 1);
  }

  TEST_CASE("suite report omits timing unless asked") {
    SuiteOptions opt;
    opt.trials = 2;
    opt.only = {"difference_additivity"};
    const auto report = run_suite(opt);
    REQUIRE(report.checks.size() == 1);
    CHECK(report.all_pass());
    const auto plain = to_json(report);
    CHECK_FALSE(plain["checks"][0].contains("seconds"));
    CHECK(to_json(report, true)["checks"][0].contains("seconds"));
  }
}
