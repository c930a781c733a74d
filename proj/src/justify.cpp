#include "pengu/justify.hpp"

#include <deque>
#include <set>
#include <string>

#include "pengu/error.hpp"

namespace pengu {

QueryTransform transform_query(const KnowledgeBase& kb, const Query& q) {
  QueryTransform t{kb, {}, q};
  const Concept fresh = Concept::atomic(kFreshConcept);
  auto add = [&](Axiom a) { t.fresh_ids.push_back(t.kb.add(std::move(a), std::nullopt, Origin::FreshQuery)); };
  if (const auto* ca = std::get_if<ConceptAssertionQuery>(&q)) {
    add(ConceptAssertion{ca->individual, fresh});
    add(Gci{fresh, complement(ca->type)});
  } else if (const auto* sq = std::get_if<SubsumptionQuery>(&q)) {
    add(ConceptAssertion{kFreshIndividual, fresh});
    add(Gci{fresh, Concept::conjunction({sq->sub, complement(sq->sup)})});
  }
  return t;
}

namespace {

bool has_query(const Query& q) { return !std::holds_alternative<IsConsistentQuery>(q); }

/// Reiter's hitting-set tree, breadth first. A node is the set of removed
/// axioms on its path.
class HittingSetTree {
 public:
  HittingSetTree(const QueryTransform& t, const JustifyOptions& options)
      : t_(t), options_(options), tableau_(t.kb, options.tableau) {
    base_ = ids::minus(t.kb.ids(), t.fresh_ids);
  }

  JustificationBundle run() {
    std::deque<IdSet> queue{IdSet{}};
    std::set<IdSet> seen;
    while (!queue.empty() && !bundle_.partial) {
      IdSet path = std::move(queue.front());
      queue.pop_front();
      if (!seen.insert(path).second) continue;
      if (covers(closed_full_, path)) continue;
      auto label = label_for(path);
      if (!label) {
        closed_full_.push_back(path);
        continue;
      }
      for (AxiomId id : *label) {
        if (ids::contains(t_.fresh_ids, id)) continue;
        IdSet child = path;
        child.insert(std::upper_bound(child.begin(), child.end(), id), id);
        if (!seen.count(child)) queue.push_back(std::move(child));
      }
    }
    for (const auto& j : query_) bundle_.query_justs.push_back(ids::minus(j, t_.fresh_ids));
    bundle_.incons_justs = pure_;
    ids::sort_family(bundle_.query_justs);
    ids::sort_family(bundle_.incons_justs);
    return std::move(bundle_);
  }

 private:
  static bool covers(const std::vector<IdSet>& closed, const IdSet& path) {
    for (const auto& c : closed) {
      if (ids::is_subset(c, path)) return true;
    }
    return false;
  }

  static const Justification* reusable(const std::vector<Justification>& known, const IdSet& path) {
    for (const auto& j : known) {
      if (ids::disjoint(j, path)) return &j;
    }
    return nullptr;
  }

  bool record(std::vector<Justification>& store, Justification j) {
    if (options_.max_justifications && pure_.size() + query_.size() >= *options_.max_justifications) {
      bundle_.partial = true;
      return false;
    }
    store.push_back(std::move(j));
    return true;
  }

  // Pure inconsistency first; query justifications only once the non-fresh
  // part of the node is consistent.
  std::optional<Justification> label_for(const IdSet& path) {
    const IdSet active = ids::minus(base_, path);
    if (!covers(closed_pure_, path)) {
      if (const auto* j = reusable(pure_, path)) return *j;
      if (auto j = tableau_.find_justification(active)) {
        if (!record(pure_, *j)) return std::nullopt;
        return j;
      }
      closed_pure_.push_back(path);
    }
    if (t_.fresh_ids.empty()) return std::nullopt;
    if (const auto* j = reusable(query_, path)) return *j;
    auto j = tableau_.find_justification(ids::unite(active, t_.fresh_ids));
    if (!j) return std::nullopt;
    if (!ids::is_subset(t_.fresh_ids, *j)) {
      throw Error(ErrorKind::InvariantViolation,
                  "query justification " + ids::to_string(*j) + " lacks a fresh axiom");
    }
    if (!record(query_, *j)) return std::nullopt;
    return j;
  }

  const QueryTransform& t_;
  const JustifyOptions& options_;
  Tableau tableau_;
  IdSet base_;
  std::vector<Justification> pure_;
  std::vector<Justification> query_;
  std::vector<IdSet> closed_pure_;  // paths whose non-fresh part is consistent
  std::vector<IdSet> closed_full_;  // paths with no justification left
  JustificationBundle bundle_;
};

}  // namespace

JustificationBundle all_justifications(const KnowledgeBase& kb, const Query& q,
                                       const JustifyOptions& options) {
  if (!kb.fresh_ids().empty()) {
    throw Error(ErrorKind::FreshAxiomPresent, "KB already contains query axioms");
  }
  QueryTransform t = has_query(q) ? transform_query(kb, q) : QueryTransform{kb, {}, q};
  return HittingSetTree(t, options).run();
}

JustificationBundle oracle_all_justifications(const KnowledgeBase& kb, const Query& q,
                                              const TableauOptions& options) {
  if (kb.size() > kOracleMaxAxioms) {
    throw Error(ErrorKind::TooLarge, "oracle enumeration is limited to " +
                                         std::to_string(kOracleMaxAxioms) + " axioms, KB has " +
                                         std::to_string(kb.size()));
  }
  QueryTransform t = transform_query(kb, q);
  Tableau tableau(t.kb, options);
  const IdSet base = kb.ids();
  const std::size_t n = base.size();
  const std::uint32_t subsets = 1u << n;
  std::vector<char> inconsistent(subsets, 0);
  std::vector<char> entails(subsets, 0);
  JustificationBundle bundle;
  // Subsets in increasing size so every S - x is decided before S.
  std::vector<std::uint32_t> order(subsets);
  for (std::uint32_t s = 0; s < subsets; ++s) order[s] = s;
  std::stable_sort(order.begin(), order.end(), [](std::uint32_t a, std::uint32_t b) {
    return __builtin_popcount(a) < __builtin_popcount(b);
  });
  for (std::uint32_t s : order) {
    IdSet members;
    bool sub_inconsistent = false;
    bool sub_entails = false;
    for (std::size_t i = 0; i < n; ++i) {
      if (!(s >> i & 1u)) continue;
      members.push_back(base[i]);
      sub_inconsistent |= inconsistent[s & ~(1u << i)] != 0;
      sub_entails |= entails[s & ~(1u << i)] != 0;
    }
    if (sub_inconsistent) {
      inconsistent[s] = 1;
      continue;
    }
    if (!tableau.is_consistent(members)) {
      inconsistent[s] = 1;
      bundle.incons_justs.push_back(members);
      continue;
    }
    if (!has_query(q)) continue;
    if (sub_entails) {
      entails[s] = 1;
    } else if (!tableau.is_consistent(ids::unite(members, t.fresh_ids))) {
      entails[s] = 1;
      bundle.query_justs.push_back(members);
    }
  }
  ids::sort_family(bundle.query_justs);
  ids::sort_family(bundle.incons_justs);
  return bundle;
}

}  // namespace pengu
