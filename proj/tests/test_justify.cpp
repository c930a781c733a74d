#include "doctest.h"
#include "pengu/bench.hpp"
#include "pengu/error.hpp"
#include "pengu/justify.hpp"
#include "support.hpp"

using namespace pengu;
using Family = std::vector<Justification>;

namespace {

void check_bundle_shape(const KnowledgeBase& kb, const Query& query, const JustificationBundle& b) {
  QueryTransform t = transform_query(kb, query);
  Tableau tableau(t.kb);
  for (const auto& j : b.incons_justs) {
    CHECK_FALSE(tableau.is_consistent(j));
    for (AxiomId id : j) CHECK(tableau.is_consistent(ids::without(j, id)));
    for (AxiomId id : j) CHECK_FALSE(ids::contains(t.fresh_ids, id));
  }
  for (const auto& j : b.query_justs) {
    CHECK(tableau.is_consistent(j));
    IdSet with_fresh = ids::unite(j, t.fresh_ids);
    CHECK_FALSE(tableau.is_consistent(with_fresh));
    for (AxiomId id : j) CHECK(tableau.is_consistent(ids::without(with_fresh, id)));
    for (const auto& p : b.incons_justs) CHECK_FALSE(ids::is_subset(p, j));
  }
}

}  // namespace

TEST_CASE("query transform") {
  auto kb = test::load_kb("flying_penguins_4.kb");
  auto t = transform_query(kb, test::q("ClassAssertion(Fly, pingu)"));
  REQUIRE(t.fresh_ids == IdSet{4, 5});
  CHECK(t.kb.at(4).axiom == Axiom{ConceptAssertion{"pingu", Concept::atomic("$Qp")}});
  CHECK(t.kb.at(5).axiom ==
        Axiom{Gci{Concept::atomic("$Qp"), Concept::negation(Concept::atomic("Fly"))}});
  for (AxiomId id : t.fresh_ids) {
    CHECK(t.kb.at(id).origin == Origin::FreshQuery);
    CHECK(t.kb.at(id).certain());
  }

  auto s = transform_query(kb, test::q("SubClassOf(Penguin, Bird)"));
  CHECK(s.kb.at(4).axiom == Axiom{ConceptAssertion{"$q0", Concept::atomic("$Qp")}});
  CHECK(s.kb.at(5).axiom ==
        Axiom{Gci{Concept::atomic("$Qp"),
                  Concept::conjunction({Concept::atomic("Penguin"),
                                        Concept::negation(Concept::atomic("Bird"))})}});
  CHECK(transform_query(kb, IsConsistentQuery{}).fresh_ids.empty());
}

TEST_CASE("penguin justifications") {
  auto fp1 = test::load_kb("flying_penguins_1.kb");
  auto b1 = all_justifications(fp1, test::q("ClassAssertion(Bird, pingu)"));
  CHECK(b1.query_justs == Family{{0, 2}});
  CHECK(b1.incons_justs.empty());
  CHECK(oracle_all_justifications(fp1, test::q("ClassAssertion(Bird, pingu)")) == b1);

  auto fp4 = test::load_kb("flying_penguins_4.kb");
  auto b4 = all_justifications(fp4, test::q("ClassAssertion(Fly, pingu)"));
  CHECK(b4.query_justs == Family{{0, 1, 3}});
  CHECK(b4.incons_justs == Family{{0, 1, 2, 3}});
  CHECK_FALSE(b4.partial);
}

TEST_CASE("university justifications") {
  auto kb = test::load_kb("university_prob.kb");
  auto b = all_justifications(kb, test::q("ClassAssertion(UniversityEmployee, alice)"));
  CHECK(b.query_justs == Family{{2, 5}, {2, 6}});
  CHECK(b.incons_justs == Family{{3, 5, 6}});
  CHECK(all_justifications(kb, test::q("ClassAssertion(Lecturer, alice)")).query_justs ==
        Family{{0, 5, 6}});
  CHECK(all_justifications(kb, test::q("ClassAssertion(PhD, alice)")).query_justs ==
        Family{{1, 4, 5}});
  CHECK(all_justifications(kb, test::q("ClassAssertion(Person, alice)")).query_justs ==
        Family{{4}});
  auto consistency = all_justifications(kb, IsConsistentQuery{});
  CHECK(consistency.query_justs.empty());
  CHECK(consistency.incons_justs == Family{{3, 5, 6}});
}

TEST_CASE("subsumption queries") {
  auto kb = test::load_kb("flying_penguins_3.kb");
  auto b = all_justifications(kb, test::q("SubClassOf(Penguin, Fly)"));
  CHECK(b.query_justs == Family{{0, 1}});
  CHECK(b.incons_justs == Family{{0, 1, 2, 3}});
  CHECK(oracle_all_justifications(kb, test::q("SubClassOf(Penguin, Fly)")) == b);
}

TEST_CASE("empty KB") {
  for (const char* text : {"ClassAssertion(A, a)", "SubClassOf(A, B)", "Consistent()"}) {
    CHECK(all_justifications(KnowledgeBase{}, test::q(text)) == JustificationBundle{});
    CHECK(oracle_all_justifications(KnowledgeBase{}, test::q(text)) == JustificationBundle{});
  }
  KnowledgeBase tautology;
  tautology.add(ConceptAssertion{"a", Concept::atomic("B")});
  CHECK(all_justifications(tautology, test::q("SubClassOf(A, A)")).query_justs == Family{{}});
}

TEST_CASE("chain benchmarks") {
  for (int n = 2; n <= 4; ++n) {
    BenchSpec spec{n, BenchSetting::S1};
    auto kb = generate_bench(spec);
    auto b = all_justifications(kb, bench_query(spec));
    CHECK(b.query_justs.size() == (1u << n));
    CHECK(b.incons_justs.empty());
  }
  BenchSpec s1{3, BenchSetting::S1};
  CHECK(oracle_all_justifications(generate_bench(s1), bench_query(s1)).query_justs.size() == 8);

  BenchSpec s2{2, BenchSetting::S2};
  auto kb2 = generate_bench(s2);
  CHECK(all_justifications(kb2, bench_query(s2)).incons_justs.size() == 2);
  CHECK(oracle_all_justifications(kb2, bench_query(s2)).incons_justs.size() == 2);

  BenchSpec s3{3, BenchSetting::S3};
  auto b3 = all_justifications(generate_bench(s3), bench_query(s3));
  CHECK(b3.query_justs.size() == 8);
  CHECK(b3.incons_justs.size() == 8);

  BenchSpec s4{3, BenchSetting::S4};
  auto kb4 = generate_bench(s4);
  auto b4 = all_justifications(kb4, bench_query(s4));
  CHECK(b4.query_justs.size() == 2);
  CHECK(b4.incons_justs.size() == 8);
}

TEST_CASE("justification cap marks the bundle partial") {
  BenchSpec spec{3, BenchSetting::S3};
  auto kb = generate_bench(spec);
  JustifyOptions options;
  options.max_justifications = 5;
  auto b = all_justifications(kb, bench_query(spec), options);
  CHECK(b.partial);
  CHECK(b.query_justs.size() + b.incons_justs.size() == 5);
  options.max_justifications = 16;
  CHECK_FALSE(all_justifications(kb, bench_query(spec), options).partial);
}

TEST_CASE("oracle size guard") {
  auto kb = generate_bench({5, BenchSetting::S1});
  try {
    oracle_all_justifications(kb, IsConsistentQuery{});
    FAIL("no guard");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::TooLarge);
  }
}

TEST_CASE("hitting set tree matches subset enumeration on random KBs") {
  test::RandomKb gen(303);
  int with_query = 0;
  int with_incons = 0;
  for (int i = 0; i < 250; ++i) {
    auto kb = gen.kb();
    Query query = gen.query();
    CAPTURE(serialize_kb(kb));
    CAPTURE(to_string(query));
    auto fast = all_justifications(kb, query);
    auto slow = oracle_all_justifications(kb, query);
    CHECK(fast == slow);
    CHECK(all_justifications(kb, query) == fast);
    check_bundle_shape(kb, query, fast);
    with_query += fast.query_justs.empty() ? 0 : 1;
    with_incons += fast.incons_justs.empty() ? 0 : 1;
  }
  MESSAGE(with_query << " KBs with query justifications, " << with_incons << " inconsistent");
  CHECK(with_query > 40);
  CHECK(with_incons > 40);
}
