#include "pengu/semantics.hpp"

#include <cmath>
#include <string>

#include "pengu/error.hpp"

namespace pengu {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::NotEntailed: return "not_entailed";
    case Verdict::BraveOnly: return "brave";
    case Verdict::AR: return "ar";
    case Verdict::IAR: return "iar";
  }
  return "unknown";
}

IdSet removable_ids(const KnowledgeBase& kb, RemovableMode mode) {
  return mode == RemovableMode::ABox ? kb.abox_ids() : kb.probabilistic_ids();
}

namespace {

VarMap variables_for(const KnowledgeBase& kb, const IdSet& removable) {
  VarMap vars;
  for (AxiomId id : kb.ids()) {
    vars[id] = ids::contains(removable, id) ? std::optional<std::uint32_t>(id) : std::nullopt;
  }
  return vars;
}

std::vector<IdSet> minimal_projections(const std::vector<Justification>& justs, const IdSet& onto) {
  std::vector<IdSet> out;
  for (const auto& j : justs) ids::insert_minimal(out, ids::intersect(j, onto));
  ids::sort_family(out);
  return out;
}

}  // namespace

ProbReport prob_report(const KnowledgeBase& kb, const JustificationBundle& bundle) {
  BddManager bdd(kb.id_bound());
  VarMap vars = variables_for(kb, kb.probabilistic_ids());
  WeightMap weights;
  for (const auto& a : kb.axioms()) {
    if (a.probability) weights[a.id] = *a.probability;
  }
  BddRef q = bdd.from_justifications(bundle.query_justs, vars);
  BddRef incons = bdd.from_justifications(bundle.incons_justs, vars);
  BddRef cons = bdd.negate(incons);

  ProbReport r;
  r.partial = bundle.partial;
  r.p_incons = bdd.probability(incons, weights);
  r.p_cons = bdd.probability(cons, weights);
  r.p_q_and_cons = bdd.probability(bdd.conj(q, cons), weights);
  if (std::abs(r.p_cons + r.p_incons - 1.0) > 1e-12) {
    throw Error(ErrorKind::InvariantViolation,
                "P(Cons) = " + std::to_string(r.p_cons) + " but P(Incons) = " + std::to_string(r.p_incons));
  }
  if (!bdd.is_zero(cons)) r.p_c = r.p_q_and_cons / r.p_cons;
  return r;
}

RepairChecker::RepairChecker(const KnowledgeBase& kb, const JustificationBundle& bundle,
                             RemovableMode mode)
    : bdd_(kb.id_bound()) {
  const IdSet removable = removable_ids(kb, mode);
  vars_ = variables_for(kb, removable);
  query_ = bdd_.from_justifications(bundle.query_justs, vars_);
  consistent_ = bdd_.negate(bdd_.from_justifications(bundle.incons_justs, vars_));
  conflicts_ = minimal_projections(bundle.incons_justs, removable);
  causes_ = minimal_projections(bundle.query_justs, removable);
  for (const auto& c : conflicts_) {
    tainted_ = ids::unite(tainted_, c);
    no_repair_ |= c.empty();
  }
}

bool RepairChecker::brave() { return !bdd_.is_zero(bdd_.conj(query_, consistent_)); }

bool RepairChecker::iar() {
  if (no_repair_) return false;
  for (const auto& c : causes_) {
    if (ids::disjoint(c, tainted_)) return true;
  }
  return false;
}

bool RepairChecker::ar() {
  if (no_repair_ || causes_.empty()) return false;
  // X_{C,B}: conflict B meets cause C and everything in B outside C is kept,
  // so C cannot be kept. AR fails iff a consistent choice defeats every cause.
  BddRef every_cause_defeated = bdd_.one();
  BddRef witnesses_kept = bdd_.one();
  for (const auto& cause : causes_) {
    if (cause.empty()) return true;
    BddRef some_conflict = bdd_.zero();
    for (const auto& conflict : conflicts_) {
      if (ids::disjoint(conflict, cause)) continue;
      BddRef x = bdd_.var(bdd_.add_variables(1));
      some_conflict = bdd_.disj(some_conflict, x);
      for (AxiomId beta : ids::minus(conflict, cause)) {
        witnesses_kept = bdd_.conj(witnesses_kept, bdd_.disj(bdd_.negate(x), bdd_.var(beta)));
      }
    }
    if (bdd_.is_zero(some_conflict)) return true;
    every_cause_defeated = bdd_.conj(every_cause_defeated, some_conflict);
  }
  return bdd_.is_zero(bdd_.conj(bdd_.conj(every_cause_defeated, witnesses_kept), consistent_));
}

Verdict RepairChecker::verdict() {
  if (!brave()) return Verdict::NotEntailed;
  if (iar()) return Verdict::IAR;
  if (ar()) return Verdict::AR;
  return Verdict::BraveOnly;
}

bool brave_check(const KnowledgeBase& kb, const JustificationBundle& bundle, RemovableMode mode) {
  return RepairChecker(kb, bundle, mode).brave();
}
bool iar_check(const KnowledgeBase& kb, const JustificationBundle& bundle, RemovableMode mode) {
  return RepairChecker(kb, bundle, mode).iar();
}
bool ar_check(const KnowledgeBase& kb, const JustificationBundle& bundle, RemovableMode mode) {
  return RepairChecker(kb, bundle, mode).ar();
}
Verdict verdict(const KnowledgeBase& kb, const JustificationBundle& bundle, RemovableMode mode) {
  return RepairChecker(kb, bundle, mode).verdict();
}

namespace {

IdSet subset_of(const IdSet& universe, std::uint32_t mask) {
  IdSet out;
  for (std::size_t i = 0; i < universe.size(); ++i) {
    if (mask >> i & 1u) out.push_back(universe[i]);
  }
  return out;
}

/// Entailment by refutation on the transformed KB.
class Entailment {
 public:
  Entailment(const KnowledgeBase& kb, const Query& q, const TableauOptions& options)
      : t_(transform_query(kb, q)), tableau_(t_.kb, options),
        has_query_(!std::holds_alternative<IsConsistentQuery>(q)) {}

  bool consistent(const IdSet& active) const { return tableau_.is_consistent(active); }
  /// `active` must be consistent.
  bool entails(const IdSet& active) const {
    return has_query_ && !tableau_.is_consistent(ids::unite(active, t_.fresh_ids));
  }

 private:
  QueryTransform t_;
  Tableau tableau_;
  bool has_query_;
};

}  // namespace

ProbReport oracle_world_probs(const KnowledgeBase& kb, const Query& q, std::size_t max_probabilistic,
                              const TableauOptions& options) {
  const IdSet prob = kb.probabilistic_ids();
  const std::size_t limit = std::min(max_probabilistic, kOracleMaxProbabilistic);
  if (prob.size() > limit) {
    throw Error(ErrorKind::TooLarge, "world enumeration is limited to " + std::to_string(limit) +
                                         " probabilistic axioms, KB has " + std::to_string(prob.size()));
  }
  Entailment oracle(kb, q, options);
  const IdSet certain = kb.certain_ids();
  ProbReport r;
  r.p_cons = 0.0;
  std::uint64_t consistent_worlds = 0;
  for (std::uint32_t mask = 0; mask < (1u << prob.size()); ++mask) {
    World w{subset_of(prob, mask)};
    double p = world_probability(kb, w);
    IdSet active = ids::unite(certain, w.selection);
    if (!oracle.consistent(active)) {
      r.p_incons += p;
      continue;
    }
    ++consistent_worlds;
    r.p_cons += p;
    if (oracle.entails(active)) r.p_q_and_cons += p;
  }
  if (consistent_worlds > 0) r.p_c = r.p_q_and_cons / r.p_cons;
  return r;
}

std::vector<IdSet> oracle_repairs(const KnowledgeBase& kb, RemovableMode mode,
                                  const TableauOptions& options) {
  const IdSet removable = removable_ids(kb, mode);
  if (removable.size() > kOracleMaxRemovable) {
    throw Error(ErrorKind::TooLarge, "repair enumeration is limited to " +
                                         std::to_string(kOracleMaxRemovable) +
                                         " removable axioms, KB has " + std::to_string(removable.size()));
  }
  const IdSet fixed = ids::minus(kb.ids(), removable);
  Tableau tableau(kb, options);
  const std::uint32_t subsets = 1u << removable.size();
  std::vector<std::uint32_t> order(subsets);
  for (std::uint32_t s = 0; s < subsets; ++s) order[s] = s;
  std::stable_sort(order.begin(), order.end(), [](std::uint32_t a, std::uint32_t b) {
    return __builtin_popcount(a) > __builtin_popcount(b);
  });
  std::vector<std::uint32_t> found;
  std::vector<IdSet> repairs;
  for (std::uint32_t s : order) {
    bool dominated = false;
    for (std::uint32_t r : found) dominated |= (s & r) == s;
    if (dominated) continue;
    IdSet chosen = subset_of(removable, s);
    if (tableau.is_consistent(ids::unite(fixed, chosen))) {
      found.push_back(s);
      repairs.push_back(std::move(chosen));
    }
  }
  ids::sort_family(repairs);
  return repairs;
}

Verdict oracle_verdict(const KnowledgeBase& kb, const Query& q, RemovableMode mode,
                       const TableauOptions& options) {
  auto repairs = oracle_repairs(kb, mode, options);
  if (repairs.empty()) {
    throw Error(ErrorKind::NoRepair, "the non-removable axioms are inconsistent on their own");
  }
  const IdSet fixed = ids::minus(kb.ids(), removable_ids(kb, mode));
  Entailment oracle(kb, q, options);
  bool brave = false;
  bool ar = true;
  IdSet common = repairs.front();
  for (const auto& r : repairs) {
    bool entailed = oracle.entails(ids::unite(fixed, r));
    brave |= entailed;
    ar &= entailed;
    common = ids::intersect(common, r);
  }
  if (oracle.entails(ids::unite(fixed, common))) return Verdict::IAR;
  if (ar) return Verdict::AR;
  if (brave) return Verdict::BraveOnly;
  return Verdict::NotEntailed;
}

}  // namespace pengu
