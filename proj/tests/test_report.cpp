#include <cmath>
#include <filesystem>

#include "doctest.h"
#include "json.hpp"
#include "pengu/report.hpp"
#include "support.hpp"

using namespace pengu;

namespace {

std::vector<std::string> keys(const nlohmann::ordered_json& j) {
  std::vector<std::string> out;
  for (const auto& [k, v] : j.items()) out.push_back(k);
  return out;
}

bool close(double a, double b) { return std::abs(a - b) <= 1e-9; }

}  // namespace

TEST_CASE("JSON field order") {
  auto kb = test::load_kb("university_prob.kb");
  auto report = run_query(kb, test::q("ClassAssertion(PhD, alice)"));
  auto j = nlohmann::ordered_json::parse(to_json(report));
  CHECK(keys(j) == std::vector<std::string>{"query", "consistent", "p_incons", "p_cons", "p_q_and_cons", "p_c",
                                            "p_c_undefined_reason", "verdict", "no_repair", "partial",
                                            "query_justifications", "incons_justifications", "timings"});
  CHECK(keys(j["timings"]) == std::vector<std::string>{"justification_ms", "disponte_ms", "repair_ms", "total_ms"});
  for (const auto& [k, v] : j["timings"].items()) CHECK(v.get<double>() >= 0.0);
  CHECK(j["verdict"] == "brave");
  CHECK(j["query_justifications"] == nlohmann::json::parse("[[1,4,5]]"));

  auto oracle = nlohmann::ordered_json::parse(to_json(run_oracle(kb, test::q("ClassAssertion(PhD, alice)"))));
  CHECK(keys(oracle).back() == "oracle");
  CHECK(oracle["oracle"] == true);
}

TEST_CASE("verdict present iff repairs are requested") {
  auto kb = test::load_kb("university_prob.kb");
  auto query = test::q("ClassAssertion(Person, alice)");
  QueryOptions options;
  options.semantics = SemanticsMode::Disponte;
  CHECK_FALSE(run_query(kb, query, options).verdict.has_value());
  CHECK(nlohmann::json::parse(to_json(run_query(kb, query, options)))["verdict"].is_null());
  options.semantics = SemanticsMode::Repairs;
  CHECK(run_query(kb, query, options).verdict == Verdict::IAR);
}

TEST_CASE("justification lists are sorted by size then lexicographically") {
  auto kb = test::load_kb("flying_penguins_1_1.kb");
  auto report = run_query(kb, test::q("ClassAssertion(Bird, pingu)"));
  CHECK(*report.query_justifications == std::vector<Justification>{{2}, {0, 1}});
}

TEST_CASE("certainly inconsistent KB in JSON") {
  auto kb = test::load_kb("flying_penguins_4.kb");
  auto j = nlohmann::json::parse(to_json(run_query(kb, test::q("ClassAssertion(Fly, pingu)"))));
  CHECK(j["p_c"].is_null());
  CHECK(j["p_c_undefined_reason"] == "certainly inconsistent");
  CHECK(j["verdict"] == "not_entailed");
  CHECK(j["no_repair"] == true);
}

TEST_CASE("query and oracle agree on every bundled KB") {
  const char* queries[] = {"Consistent()",
                           "ClassAssertion(Bird, pingu)",
                           "ClassAssertion(Fly, pingu)",
                           "ClassAssertion(Not(Fly), pingu)",
                           "SubClassOf(Penguin, Fly)",
                           "ClassAssertion(Lecturer, alice)",
                           "ClassAssertion(PhD, alice)",
                           "ClassAssertion(UniversityEmployee, alice)",
                           "ClassAssertion(Person, alice)",
                           "SubClassOf(Professor, UniversityEmployee)"};
  int compared = 0;
  for (const auto& entry : std::filesystem::directory_iterator(PENGU_DATA_DIR)) {
    if (entry.path().extension() != ".kb") continue;
    auto kb = parse_kb(test::read_file(entry.path().string()));
    for (const char* text : queries) {
      for (auto mode : {RemovableMode::Probabilistic, RemovableMode::ABox}) {
        CAPTURE(entry.path().filename().string());
        CAPTURE(text);
        auto query = test::q(text);
        QueryOptions qo;
        qo.removable = mode;
        OracleOptions oo;
        oo.removable = mode;
        auto a = run_query(kb, query, qo);
        auto b = run_oracle(kb, query, oo);
        CHECK(close(a.prob.p_incons, b.prob.p_incons));
        CHECK(close(a.prob.p_cons, b.prob.p_cons));
        CHECK(close(a.prob.p_q_and_cons, b.prob.p_q_and_cons));
        REQUIRE(a.prob.p_c.has_value() == b.prob.p_c.has_value());
        if (a.prob.p_c) CHECK(close(*a.prob.p_c, *b.prob.p_c));
        CHECK(a.verdict == b.verdict);
        CHECK(a.no_repair == b.no_repair);
        CHECK(a.consistent == b.consistent);
        CHECK(a.query_justifications == b.query_justifications);
        CHECK(a.incons_justifications == b.incons_justifications);
        ++compared;
      }
    }
  }
  CHECK(compared == 160);
}

TEST_CASE("text report lists axioms of each justification") {
  auto kb = test::load_kb("university_prob.kb");
  auto text = to_text(run_query(kb, test::q("Consistent()")), kb, true);
  CHECK(text.find("P(Incons) = 0.16") != std::string::npos);
  CHECK(text.find("{3, 5, 6}") != std::string::npos);
  CHECK(text.find("5: ClassAssertion(Professor, alice) [p=0.2]") != std::string::npos);
}
