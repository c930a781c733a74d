#pragma once

#include <cstdint>
#include <memory>
#include <optional>

#include "pengu/id_set.hpp"
#include "pengu/knowledge_base.hpp"

namespace pengu {

namespace detail {
struct CompiledKb;
}

struct TableauOptions {
  /// Rule applications allowed per consistency call.
  std::uint64_t max_steps = 1'000'000;
  /// Tableau nodes allowed per consistency call.
  std::uint32_t max_nodes = 100'000;
  /// Justifications kept per traced label (smallest first).
  std::uint32_t max_traces = 4;
};

/// ALC tableau with a justification tracing function.
///
/// The KB is compiled once (concepts interned in NNF, GCIs internalised as
/// `nnf(¬C ⊔ D)`); every query then runs over a subset of its axiom ids, so
/// the hitting-set driver can probe many sub-KBs without recompiling.
///
/// Rule priority is ⊓ > ∀ > GCI > ⊔ > ∃, nodes in creation order. Each
/// label carries the axiom sets that derived it and the branch points it
/// depends on; a closed branch reports one clash justification (smallest,
/// then lexicographic) and the ⊔-rule joins the justifications of its
/// closed alternatives. Alternatives that do not depend on the current
/// choice are skipped (backjumping). Anonymous nodes use subset blocking.
///
/// Throws Error{ResourceLimit} when the step or node budget is exceeded.
class Tableau {
 public:
  explicit Tableau(const KnowledgeBase& kb, TableauOptions options = {});
  ~Tableau();
  Tableau(Tableau&&) noexcept;
  Tableau& operator=(Tableau&&) noexcept;

  bool is_consistent() const;
  bool is_consistent(const IdSet& active) const;

  /// Inconsistent subset of `active` read off the closed tableau, or nullopt
  /// when `active` is consistent. Not necessarily minimal.
  std::optional<IdSet> trace_inconsistency(const IdSet& active) const;

  /// Subset-minimal inconsistent subset of `active`, or nullopt.
  std::optional<Justification> find_justification(const IdSet& active) const;

  const KnowledgeBase& kb() const noexcept;
  /// Number of tableau runs performed so far.
  std::uint64_t runs() const noexcept;

 private:
  std::unique_ptr<detail::CompiledKb> compiled_;
};

bool is_consistent(const KnowledgeBase& kb, TableauOptions options = {});

/// nullopt iff kb is consistent; otherwise one subset-minimal inconsistent
/// subset of kb's axiom ids.
std::optional<Justification> find_one_incons_justification(const KnowledgeBase& kb,
                                                           TableauOptions options = {});

}  // namespace pengu
