#pragma once

#include <optional>
#include <vector>

#include "pengu/bdd.hpp"
#include "pengu/justify.hpp"
#include "pengu/knowledge_base.hpp"

namespace pengu {

struct ProbReport {
  double p_incons = 0.0;
  double p_cons = 1.0;
  double p_q_and_cons = 0.0;
  /// P(Q, Cons) / P(Cons); absent when the KB is certainly inconsistent.
  std::optional<double> p_c;
  /// Justifications were capped: p_incons and p_q_and_cons are lower bounds.
  bool partial = false;
};

/// Probabilities from the justification BDDs. Throws Error{InvariantViolation}
/// if P(Cons) and 1 - P(Incons) disagree beyond 1e-12.
ProbReport prob_report(const KnowledgeBase& kb, const JustificationBundle& bundle);

enum class Verdict { NotEntailed, BraveOnly, AR, IAR };
const char* to_string(Verdict v);

/// Which axioms a repair may drop.
enum class RemovableMode { Probabilistic, ABox };

IdSet removable_ids(const KnowledgeBase& kb, RemovableMode mode);

/// Brave, IAR and AR checks over one justification bundle. The checks share
/// one BDD manager whose variables are the removable axioms, followed by the
/// auxiliary variables of the AR encoding.
class RepairChecker {
 public:
  RepairChecker(const KnowledgeBase& kb, const JustificationBundle& bundle,
                RemovableMode mode = RemovableMode::Probabilistic);

  /// Some inconsistency justification has no removable axiom.
  bool no_repair() const noexcept { return no_repair_; }
  /// Minimal removable projections of the inconsistency justifications.
  const std::vector<IdSet>& conflicts() const noexcept { return conflicts_; }
  /// Minimal removable projections of the query justifications.
  const std::vector<IdSet>& causes() const noexcept { return causes_; }
  /// Removable axioms that occur in some conflict.
  const IdSet& tainted() const noexcept { return tainted_; }

  bool brave();
  bool iar();
  bool ar();
  /// Brave, then IAR, then AR.
  Verdict verdict();

 private:
  BddManager bdd_;
  VarMap vars_;
  BddRef query_;
  BddRef consistent_;
  std::vector<IdSet> conflicts_;
  std::vector<IdSet> causes_;
  IdSet tainted_;
  bool no_repair_ = false;
};

bool brave_check(const KnowledgeBase& kb, const JustificationBundle& bundle,
                 RemovableMode mode = RemovableMode::Probabilistic);
bool iar_check(const KnowledgeBase& kb, const JustificationBundle& bundle,
               RemovableMode mode = RemovableMode::Probabilistic);
bool ar_check(const KnowledgeBase& kb, const JustificationBundle& bundle,
              RemovableMode mode = RemovableMode::Probabilistic);
Verdict verdict(const KnowledgeBase& kb, const JustificationBundle& bundle,
                RemovableMode mode = RemovableMode::Probabilistic);

inline constexpr std::size_t kOracleMaxProbabilistic = 20;
inline constexpr std::size_t kOracleMaxRemovable = 16;

/// Sums world probabilities by running the tableau on every world.
/// Throws Error{TooLarge} above `max_probabilistic` probabilistic axioms.
ProbReport oracle_world_probs(const KnowledgeBase& kb, const Query& q,
                              std::size_t max_probabilistic = kOracleMaxProbabilistic,
                              const TableauOptions& options = {});

/// Maximal removable subsets consistent with the fixed axioms, sorted.
/// Empty when the fixed axioms alone are inconsistent.
/// Throws Error{TooLarge} above kOracleMaxRemovable removable axioms.
std::vector<IdSet> oracle_repairs(const KnowledgeBase& kb,
                                  RemovableMode mode = RemovableMode::Probabilistic,
                                  const TableauOptions& options = {});

/// Brave/AR/IAR evaluated over the enumerated repairs.
/// Throws Error{NoRepair} when there is no repair, Error{TooLarge} as above.
Verdict oracle_verdict(const KnowledgeBase& kb, const Query& q,
                       RemovableMode mode = RemovableMode::Probabilistic,
                       const TableauOptions& options = {});

}  // namespace pengu
