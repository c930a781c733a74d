#include <map>
#include <set>

#include "doctest.h"
#include "pengu/error.hpp"
#include "pengu/tableau.hpp"
#include "support.hpp"

using namespace pengu;

namespace {

Concept A(const char* n) { return Concept::atomic(n); }

bool has_some(const Concept& c) {
  if (c.kind() == Concept::Kind::Some) return true;
  for (const auto& op : c.operands()) {
    if (has_some(op)) return true;
  }
  return false;
}

bool existential_free(const KnowledgeBase& kb) {
  for (const auto& a : kb.axioms()) {
    if (const auto* g = std::get_if<Gci>(&a.axiom)) {
      if (has_some(complement(g->sub)) || has_some(nnf(g->sup))) return false;
    } else if (const auto* ca = std::get_if<ConceptAssertion>(&a.axiom)) {
      if (has_some(nnf(ca->type))) return false;
    }
  }
  return true;
}

void collect_names(const Concept& c, std::set<std::string>& out) {
  if (c.is_atomic()) out.insert(c.name());
  for (const auto& op : c.operands()) collect_names(op, out);
}

/// Brute-force model search for ∃-free KBs. Without existentials a model can
/// be cut down to the named individuals (one element if there are none) with
/// roles interpreted as exactly the asserted pairs.
class ModelSearch {
 public:
  explicit ModelSearch(const KnowledgeBase& kb) : kb_(kb) {
    std::map<std::string, int> inds;
    auto ind = [&](const std::string& n) {
      return inds.emplace(n, static_cast<int>(inds.size())).first->second;
    };
    std::set<std::string> names;
    for (const auto& a : kb.axioms()) {
      if (const auto* g = std::get_if<Gci>(&a.axiom)) {
        collect_names(g->sub, names);
        collect_names(g->sup, names);
      } else if (const auto* ca = std::get_if<ConceptAssertion>(&a.axiom)) {
        collect_names(ca->type, names);
        ind(ca->individual);
      } else {
        const auto& r = std::get<RoleAssertion>(a.axiom);
        edges_.insert({r.role, ind(r.subject), ind(r.object)});
      }
    }
    domain_ = std::max<int>(1, static_cast<int>(inds.size()));
    int k = 0;
    for (const auto& n : names) name_index_[n] = k++;
    individual_ = inds;
  }

  bool satisfiable() {
    const int bits = static_cast<int>(name_index_.size()) * domain_;
    REQUIRE(bits <= 20);
    for (std::uint32_t ext = 0; ext < (1u << bits); ++ext) {
      ext_ = ext;
      if (satisfied()) return true;
    }
    return false;
  }

 private:
  bool holds(const Concept& c, int d) const {
    using K = Concept::Kind;
    switch (c.kind()) {
      case K::Top: return true;
      case K::Bottom: return false;
      case K::Atomic: return ext_ >> (name_index_.at(c.name()) * domain_ + d) & 1u;
      case K::Not: return !holds(c.operand(), d);
      case K::And:
        for (const auto& op : c.operands()) {
          if (!holds(op, d)) return false;
        }
        return true;
      case K::Or:
        for (const auto& op : c.operands()) {
          if (holds(op, d)) return true;
        }
        return false;
      case K::Some:
      case K::All: {
        bool some = c.kind() == K::Some;
        for (const auto& [role, from, to] : edges_) {
          if (role != c.role() || from != d) continue;
          if (holds(c.operand(), to) == some) return some;
        }
        return !some;
      }
    }
    return false;
  }

  bool satisfied() const {
    for (const auto& a : kb_.axioms()) {
      if (const auto* g = std::get_if<Gci>(&a.axiom)) {
        for (int d = 0; d < domain_; ++d) {
          if (holds(g->sub, d) && !holds(g->sup, d)) return false;
        }
      } else if (const auto* ca = std::get_if<ConceptAssertion>(&a.axiom)) {
        if (!holds(ca->type, individual_.at(ca->individual))) return false;
      }
    }
    return true;
  }

  const KnowledgeBase& kb_;
  std::map<std::string, int> name_index_;
  std::map<std::string, int> individual_;
  std::set<std::tuple<std::string, int, int>> edges_;
  int domain_ = 1;
  std::uint32_t ext_ = 0;
};

void check_minimal(const KnowledgeBase& kb, const Justification& j) {
  Tableau t(kb);
  CHECK_FALSE(t.is_consistent(j));
  for (AxiomId id : j) CHECK(t.is_consistent(ids::without(j, id)));
}

}  // namespace

TEST_CASE("basic consistency") {
  CHECK(is_consistent(KnowledgeBase{}));
  CHECK_FALSE(find_one_incons_justification(KnowledgeBase{}));
  CHECK(is_consistent(test::load_kb("flying_penguins_1.kb")));
  CHECK_FALSE(find_one_incons_justification(test::load_kb("flying_penguins_1.kb")));

  KnowledgeBase top_empty;
  top_empty.add(Gci{Concept::top(), Concept::bottom()});
  CHECK_FALSE(is_consistent(top_empty));
}

TEST_CASE("penguin KB with all axioms certain") {
  auto kb = test::load_kb("flying_penguins_4.kb");
  CHECK_FALSE(is_consistent(kb));
  CHECK(find_one_incons_justification(kb) == Justification{0, 1, 2, 3});
}

TEST_CASE("university KBs") {
  CHECK_FALSE(is_consistent(test::load_kb("university.kb")));
  auto prob = test::load_kb("university_prob.kb");
  CHECK_FALSE(is_consistent(prob));
  CHECK(find_one_incons_justification(prob) == Justification{3, 5, 6});
  CHECK(is_consistent(test::load_kb("university_prob_consistent.kb")));
}

TEST_CASE("role restrictions") {
  KnowledgeBase kb;
  kb.add(RoleAssertion{"r", "a", "b"});
  kb.add(ConceptAssertion{"a", Concept::all("r", A("B"))});
  kb.add(ConceptAssertion{"b", !A("B")});
  kb.add(ConceptAssertion{"a", A("Unrelated")});
  CHECK(find_one_incons_justification(kb) == Justification{0, 1, 2});

  KnowledgeBase ex;
  ex.add(Gci{Concept::top(), Concept::some("r", A("A"))});
  ex.add(Gci{A("A"), A("B")});
  ex.add(ConceptAssertion{"x", Concept::all("r", !A("B"))});
  CHECK(find_one_incons_justification(ex) == Justification{0, 1, 2});
  CHECK(Tableau(ex).is_consistent({0, 1}));
}

TEST_CASE("blocking terminates cyclic existentials") {
  KnowledgeBase kb;
  kb.add(Gci{A("A"), Concept::some("r", A("A"))});
  kb.add(Gci{A("A"), Concept::some("s", A("B") | A("C"))});
  kb.add(Gci{A("B"), Concept::all("s", !A("A"))});
  kb.add(ConceptAssertion{"a", A("A")});
  CHECK(is_consistent(kb));

  KnowledgeBase loop;
  loop.add(Gci{Concept::top(), Concept::some("r", Concept::top())});
  CHECK(is_consistent(loop));
}

TEST_CASE("budget overrun is an error, not a verdict") {
  auto kb = test::load_kb("university_prob.kb");
  try {
    is_consistent(kb, TableauOptions{.max_steps = 5});
    FAIL("budget not enforced");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ResourceLimit);
  }
}

TEST_CASE("restricted runs reject unknown ids") {
  Tableau t(test::load_kb("flying_penguins_1.kb"));
  CHECK_THROWS_AS(t.is_consistent({9}), Error);
}

TEST_CASE("agreement with model search on existential-free KBs") {
  test::RandomKb gen(101, {.max_tbox = 3, .max_abox = 3, .max_depth = 2, .concept_names = 4});
  int checked = 0;
  int inconsistent = 0;
  while (checked < 600) {
    auto kb = gen.kb();
    if (!existential_free(kb)) continue;
    ++checked;
    bool expected = ModelSearch(kb).satisfiable();
    CAPTURE(serialize_kb(kb));
    CHECK(is_consistent(kb) == expected);
    inconsistent += expected ? 0 : 1;
  }
  MESSAGE(inconsistent << " of " << checked << " KBs inconsistent");
  CHECK(inconsistent > 50);
}

TEST_CASE("extracted justifications are inconsistent and minimal") {
  test::RandomKb gen(202, {.max_tbox = 5, .max_abox = 6, .max_depth = 2});
  int found = 0;
  for (int i = 0; i < 400; ++i) {
    auto kb = gen.kb();
    CAPTURE(serialize_kb(kb));
    Tableau t(kb);
    auto j = t.find_justification(kb.ids());
    CHECK(j.has_value() == !t.is_consistent());
    if (!j) continue;
    ++found;
    check_minimal(kb, *j);
  }
  CHECK(found > 50);
}
