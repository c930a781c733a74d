#pragma once

#include <cstdint>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "pengu/concept.hpp"
#include "pengu/knowledge_base.hpp"
#include "pengu/parser.hpp"

namespace pengu::test {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::string data_path(const std::string& name) {
  return std::string(PENGU_DATA_DIR) + "/" + name;
}

inline KnowledgeBase load_kb(const std::string& name) {
  return parse_kb(read_file(data_path(name)));
}

inline Query q(const std::string& text) { return parse_query(text); }

struct RandomKbOptions {
  int max_tbox = 5;
  int max_abox = 6;
  int max_probabilistic = 10;
  int max_depth = 2;
  int concept_names = 4;
  int individuals = 3;
  bool quantifiers = true;
  bool role_assertions = true;
};

/// Seeded generator of small random ALC KBs and queries.
class RandomKb {
 public:
  explicit RandomKb(std::uint64_t seed, RandomKbOptions options = {})
      : rng_(seed), opt_(options) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }

  Concept atom() { return Concept::atomic(std::string(1, static_cast<char>('A' + uniform(0, opt_.concept_names - 1)))); }
  std::string individual() { return "i" + std::to_string(uniform(0, opt_.individuals - 1)); }

  Concept concept_of_depth(int depth) {
    if (depth <= 0) {
      int r = uniform(0, 19);
      if (r == 0) return Concept::top();
      if (r == 1) return Concept::bottom();
      return atom();
    }
    int kinds = opt_.quantifiers ? 6 : 4;
    switch (uniform(0, kinds - 1)) {
      case 0: return atom();
      case 1: return Concept::negation(concept_of_depth(depth - 1));
      case 2: return Concept::conjunction({concept_of_depth(depth - 1), concept_of_depth(uniform(0, depth - 1))});
      case 3: return Concept::disjunction({concept_of_depth(depth - 1), concept_of_depth(uniform(0, depth - 1))});
      case 4: return Concept::some("r", concept_of_depth(depth - 1));
      default: return Concept::all("r", concept_of_depth(depth - 1));
    }
  }

  Concept concept_() { return concept_of_depth(uniform(0, opt_.max_depth)); }

  KnowledgeBase kb() {
    KnowledgeBase kb;
    int tbox = uniform(0, opt_.max_tbox);
    int abox = uniform(1, opt_.max_abox);
    int prob_left = opt_.max_probabilistic;
    auto add = [&](Axiom ax) {
      std::optional<double> p;
      if (prob_left > 0 && coin(0.6)) {
        p = 0.05 * uniform(1, 19);
        --prob_left;
      }
      if (!kb.find(ax)) kb.add(std::move(ax), p);
    };
    for (int i = 0; i < tbox; ++i) add(Gci{concept_(), concept_()});
    for (int i = 0; i < abox; ++i) {
      if (opt_.role_assertions && opt_.quantifiers && coin(0.25)) {
        add(RoleAssertion{"r", individual(), individual()});
      } else {
        add(ConceptAssertion{individual(), concept_of_depth(uniform(0, 1))});
      }
    }
    return kb;
  }

  Query query() {
    if (coin(0.2)) return SubsumptionQuery{atom(), atom()};
    Concept c = coin(0.2) ? Concept::negation(atom()) : atom();
    if (coin(0.25)) c = Concept::disjunction({c, atom()});
    return ConceptAssertionQuery{individual(), c};
  }

 private:
  std::mt19937_64 rng_;
  RandomKbOptions opt_;
};

/// Facts about one individual plus disjointness and inclusion axioms over
/// four names: small KBs where repairs disagree often.
inline KnowledgeBase conflict_heavy_kb(RandomKb& gen) {
  KnowledgeBase kb;
  auto add = [&](Axiom ax, bool probabilistic) {
    if (kb.find(ax)) return;
    kb.add(std::move(ax), probabilistic ? std::optional<double>(0.1 * gen.uniform(1, 9)) : std::nullopt);
  };
  for (int i = gen.uniform(2, 5); i > 0; --i) add(ConceptAssertion{"a", gen.atom()}, gen.coin(0.8));
  for (int i = gen.uniform(1, 3); i > 0; --i) {
    add(Gci{gen.atom(), Concept::negation(gen.atom())}, gen.coin(0.3));
  }
  for (int i = gen.uniform(1, 3); i > 0; --i) add(Gci{gen.atom(), gen.atom()}, gen.coin(0.3));
  return kb;
}

}  // namespace pengu::test
