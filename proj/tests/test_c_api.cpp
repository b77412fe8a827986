#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "json.hpp"
#include "ut4.h"

using json = nlohmann::json;

namespace {

struct Run {
  ut4_status status;
  json body;
  std::string text;
};

Run run(const json& req, ut4_context* ctx = nullptr) {
  ut4_context* own = nullptr;
  if (!ctx) {
    REQUIRE(ut4_context_new(&own) == UT4_OK);
    ctx = own;
  }
  ut4_result* r = nullptr;
  ut4_status st = ut4_run(ctx, req.dump().c_str(), &r);
  REQUIRE(r != nullptr);
  CHECK(ut4_result_status(r) == st);
  std::string text = ut4_result_json(r, -1);
  ut4_result_free(r);
  if (own) ut4_context_free(own);
  return {st, json::parse(text), text};
}

const json kWhole = {{"generators", {"<1,0,0|0,0|0>", "<0,1,0|0,0|0>", "<0,0,1|0,0|0>"}}};

json case11(std::vector<int> p) { return {{"case", {{"ranks", {1, 1}}, {"params", p}}}}; }

json lambda_char(const json& lambda) {
  return {{"symbols", {{"t", "off_circle"}, {"z", "off_circle"}, {"lambda", "off_circle"}}},
          {"values", {"t", "z", lambda}}};
}

json polar(double turn) {
  return {{"re", std::cos(2 * std::numbers::pi * turn)}, {"im", std::sin(2 * std::numbers::pi * turn)}};
}

}  // namespace

TEST_CASE("ranks of G") {
  Run r = run({{"command", "ranks"}, {"payload", {{"subgroup", kWhole}}}});
  CHECK(r.status == UT4_OK);
  CHECK(r.body["result"] == json({{"rk1", 3}, {"rk2", 2}, {"rk3", 1}}));
}

TEST_CASE("classify a (1,1) pair") {
  Run r = run({{"command", "classify"},
               {"payload", {{"subgroup", case11({1, 0, 1, 0, 0})}, {"character", lambda_char("lambda")}}}});
  REQUIRE(r.status == UT4_OK);
  const json& res = r.body["result"];
  CHECK(res["normal_form"]["ranks"] == json({1, 1}));
  CHECK(res["verdict"]["irreducible"] == true);
  CHECK(res["stratum"]["block"] == "(1,1) S4");
}

TEST_CASE("numeric off-circle lambda selects the C* minus S1 column") {
  json chi = {{"values", {{{"re", 2}, {"im", 0}}, {{"re", "0.6"}, {"im", "0.8"}}, {{"re", 0.5}, {"im", 0}}}}};
  Run r = run({{"command", "stratum"},
               {"payload", {{"subgroup", {{"case", {{"ranks", {2, 0}}, {"params", {1, 0, 0, 1, 0, 0}}}}}},
                            {"character", chi}}}});
  REQUIRE(r.status == UT4_OK);
  const json& res = r.body["result"];
  CHECK(res["modulus_class"]["lambda"] == "off_circle");
  CHECK(res["fibers"][2]["fiber"] == "CstarMinusS1");
}

TEST_CASE("irreducible carries an oracle witness for a torsion lambda") {
  json req = {{"command", "irreducible"},
              {"payload", {{"subgroup", case11({1, 0, 1, 0, 0})}, {"character", lambda_char(polar(1.0 / 3))}}},
              {"options", {{"radius", 2}}}};
  Run r = run(req);
  REQUIRE(r.status == UT4_OK);
  CHECK(r.body["result"]["irreducible"] == false);
  CHECK(r.body["result"]["values"]["lambda"] == "e(1/3)");
  CHECK(r.body["result"]["oracle"]["witness"].is_object());
}

TEST_CASE("enumerate examples") {
  ut4_context* ctx = nullptr;
  REQUIRE(ut4_context_new(&ctx) == UT4_OK);
  REQUIRE(ut4_context_set_int(ctx, "box", 2) == UT4_OK);
  REQUIRE(ut4_context_set_int(ctx, "limit", 100000) == UT4_OK);
  Run r = run({{"command", "enumerate"}, {"payload", {{"ranks", {2, 0}}}}}, ctx);
  REQUIRE(r.status == UT4_OK);
  json want = {{"a", 1}, {"b", 0}, {"e", 0}, {"f1", 1}, {"b1", 0}, {"e1", 0}};
  bool found = false;
  for (const auto& t : r.body["result"]["tuples"]) found = found || t["params"] == want;
  CHECK(found);

  Run n1 = run({{"command", "enumerate"}, {"payload", {{"ranks", {1, 1}}, {"subset", "N1"}}}}, ctx);
  CHECK(n1.body["result"]["count"].get<size_t>() > 0);
  for (const auto& t : n1.body["result"]["tuples"]) {
    CHECK(t["params"]["d"] == 0);
    CHECK(t["params"]["f"] == 0);
    CHECK(t["params"]["b"] == 1);
  }
  Run e = run({{"command", "enumerate"}, {"payload", {{"ranks", {1, 1}}}}, {"options", {{"box", 0}}}}, ctx);
  CHECK(e.body["result"]["count"] == 0);
  ut4_context_free(ctx);
}

TEST_CASE("verify reports") {
  Run r = run({{"command", "verify"},
               {"payload", {{"ranks", {3, 2}}, {"max_listed", 3}}},
               {"options", {{"box", 1}}}});
  REQUIRE(r.status == UT4_OK);
  const json& rep = r.body["result"]["reports"][0];
  CHECK(rep["case"] == "(3,2) S");
  CHECK(rep["params_checked"].get<size_t>() > 0);
  CHECK(rep["commutator_discrepancies"] == 0);
  CHECK(rep["discrepancies"].size() <= 3);
}

TEST_CASE("equivalent and f-equivalents") {
  json chi = lambda_char("lambda");
  Run r = run({{"command", "equivalent"},
               {"payload", {{"first", {{"subgroup", case11({1, 1, 1, 0, 0})}, {"character", chi}}},
                            {"second", {{"subgroup", case11({1, 1, 1, 0, 0})}, {"character", chi}}}}},
               {"options", {{"radius", 1}}}});
  REQUIRE(r.status == UT4_OK);
  CHECK(r.body["result"]["status"] == "equivalent");
  CHECK(r.body["result"]["certified"] == true);

  Run f = run({{"command", "f-equivalents"},
               {"payload", {{"subgroup", case11({1, 1, 1, 0, 0})}, {"character", chi}}}});
  REQUIRE(f.status == UT4_OK);
  CHECK(f.body["result"]["count"] == 0);
}

TEST_CASE("isolator") {
  Run r = run({{"command", "isolator"},
               {"payload", {{"subgroup", {{"generators", {"<2,0,0|0,0|0>", "<0,0,0|0,0|3>"}}}}}}});
  REQUIRE(r.status == UT4_OK);
  CHECK(r.body["result"]["isolated"] == false);
  CHECK(r.body["result"]["index"] == 6);
}

TEST_CASE("error codes") {
  CHECK(run({{"command", "ranks"}, {"payload", {{"bogus", 1}}}}).status == UT4_E_SCHEMA);
  CHECK(run({{"command", "ranks"}}).status == UT4_E_SCHEMA);
  CHECK(run({{"command", "nope"}}).status == UT4_E_UNKNOWN_COMMAND);
  CHECK(run({{"command", "classify"}, {"payload", {{"subgroup", {{"generators", {"<0,0,0|1,0|0>"}}}}}}})
            .status == UT4_E_PRECONDITION);
  // Undeclared symbol.
  json chi = {{"values", {"t", "z", "lambda"}}};
  CHECK(run({{"command", "irreducible"}, {"payload", {{"subgroup", case11({1, 0, 1, 0, 0})}, {"character", chi}}}})
            .status == UT4_E_SCHEMA);
  // A value violating a relation of H.
  json bad = lambda_char("e(1/2)");
  bad["values"] = {"t", "z", "e(1/2)"};
  json h = {{"generators", {"<1,0,0|0,0|0>", "<0,0,0|0,1|0>", "<0,0,0|0,0|1>"}}};
  CHECK(run({{"command", "irreducible"}, {"payload", {{"subgroup", h}, {"character", bad}}}}).status ==
        UT4_E_PRECONDITION);
  // Two candidate roots within the tolerance.
  json amb = {{"command", "irreducible"},
              {"payload", {{"subgroup", case11({1, 0, 1, 0, 0})}, {"character", lambda_char(polar(1.0 / 3))}}},
              {"options", {{"numeric_q", 100000}, {"tolerance", 1e-3}}}};
  CHECK(run(amb).status == UT4_E_NUMERIC);
  ut4_result* r = nullptr;
  CHECK(ut4_run(nullptr, "{}", &r) == UT4_E_ARGUMENT);
  ut4_context* ctx = nullptr;
  REQUIRE(ut4_context_new(&ctx) == UT4_OK);
  CHECK(ut4_run(ctx, "not json", &r) == UT4_E_SCHEMA);
  ut4_result_free(r);
  CHECK(ut4_context_set_tolerance(ctx, 0.1) == UT4_E_ARGUMENT);
  CHECK(ut4_context_set_int(ctx, "nope", 1) == UT4_E_ARGUMENT);
  ut4_context_free(ctx);
}

TEST_CASE("responses are deterministic and round-trip through JSON") {
  std::vector<json> reqs = {
      {{"command", "ranks"}, {"payload", {{"subgroup", kWhole}}}},
      {{"command", "classify"},
       {"payload", {{"subgroup", case11({1, 0, 1, 0, 0})}, {"character", lambda_char("lambda")}}}},
      {{"command", "enumerate"}, {"payload", {{"ranks", {2, 1}}}}, {"options", {{"box", 1}}}},
      {{"command", "nope"}},
  };
  for (const auto& q : reqs) {
    Run a = run(q), b = run(q);
    CHECK(a.text == b.text);
    CHECK(json::parse(a.body.dump()) == a.body);
    CHECK(a.body.dump() == a.text);
  }
}

TEST_CASE("numeric lifting recovers every root of order at most 12") {
  for (int q = 1; q <= 12; ++q)
    for (int p = 0; p < q; ++p) {
      double t = 2 * std::numbers::pi * p / q;
      int64_t pp = -1, qq = -1;
      REQUIRE(ut4_lift_root(std::cos(t), std::sin(t), 120, 1e-9, &pp, &qq) == UT4_OK);
      int g = std::gcd(p, q);
      CHECK(pp == p / g);
      CHECK(qq == q / g);
    }
  int64_t pp, qq;
  CHECK(ut4_lift_root(0.5, 0, 120, 1e-9, &pp, &qq) == UT4_E_NUMERIC);
  CHECK(ut4_lift_root(std::cos(1.0), std::sin(1.0), 120, 1e-9, &pp, &qq) == UT4_E_NUMERIC);
}

TEST_CASE("numeric values in requests are lifted exactly") {
  for (int q = 1; q <= 12; ++q) {
    Run r = run({{"command", "irreducible"},
                 {"payload", {{"subgroup", case11({1, 0, 1, 0, 0})}, {"character", lambda_char(polar(1.0 / q))}}},
                 {"options", {{"radius", 0}}}});
    REQUIRE(r.status == UT4_OK);
    CHECK(r.body["result"]["values"]["lambda"] == (q == 1 ? "1" : "e(1/" + std::to_string(q) + ")"));
  }
}

TEST_CASE("subgroup handles") {
  const int64_t gens[] = {2, 0, 0, 0, 0, 0, 0, 2, 0, 0, 0, 0, 0, 0, 2, 0, 0, 0};
  ut4_subgroup* h = nullptr;
  REQUIRE(ut4_subgroup_new(gens, 3, &h) == UT4_OK);
  int r1, r2, r3, in, iso;
  CHECK(ut4_subgroup_ranks(h, &r1, &r2, &r3) == UT4_OK);
  CHECK(r1 == 3);
  CHECK(r2 == 2);
  CHECK(r3 == 1);
  const int64_t x[] = {0, 0, 0, 4, 0, 0};
  CHECK(ut4_subgroup_contains(h, x, &in) == UT4_OK);
  CHECK(in == 1);
  int64_t idx = 0;
  CHECK(ut4_subgroup_index(h, &idx) == UT4_OK);
  CHECK(idx > 1);
  CHECK(ut4_subgroup_is_isolated(h, &iso) == UT4_OK);
  CHECK(iso == 0);
  ut4_subgroup_free(h);
  CHECK(ut4_subgroup_new(nullptr, 1, &h) == UT4_E_ARGUMENT);
}
