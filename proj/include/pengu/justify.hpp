#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "pengu/knowledge_base.hpp"
#include "pengu/parser.hpp"
#include "pengu/tableau.hpp"

namespace pengu {

/// A KB extended with the fresh axioms that turn entailment of `query` into
/// inconsistency.
struct QueryTransform {
  KnowledgeBase kb;  // base axioms followed by the fresh ones
  IdSet fresh_ids;
  Query query;
};

/// Fresh concept and individual names; `$` keeps them out of the KB lexicon.
inline constexpr const char* kFreshConcept = "$Qp";
inline constexpr const char* kFreshIndividual = "$q0";

/// a:C adds {a:$Qp, $Qp ⊑ ¬C}; C ⊑ D adds {$q0:$Qp, $Qp ⊑ C ⊓ ¬D}.
/// IsConsistent adds nothing.
QueryTransform transform_query(const KnowledgeBase& kb, const Query& q);

struct JustificationBundle {
  /// Justifications of the query, fresh ids stripped. Sorted by size, then ids.
  std::vector<Justification> query_justs;
  /// Minimal inconsistent subsets of the KB. Same order.
  std::vector<Justification> incons_justs;
  /// Enumeration stopped at the justification cap.
  bool partial = false;

  friend bool operator==(const JustificationBundle&, const JustificationBundle&) = default;
};

struct JustifyOptions {
  TableauOptions tableau;
  /// Stop after this many justifications (both kinds together).
  std::optional<std::size_t> max_justifications;
};

/// All query and inconsistency justifications, by hitting-set-tree search
/// over tableau-extracted justifications. Fresh axioms are never removed.
JustificationBundle all_justifications(const KnowledgeBase& kb, const Query& q,
                                       const JustifyOptions& options = {});

/// Subset enumeration. Throws Error{TooLarge} above kOracleMaxAxioms axioms.
inline constexpr std::size_t kOracleMaxAxioms = 14;
JustificationBundle oracle_all_justifications(const KnowledgeBase& kb, const Query& q,
                                              const TableauOptions& options = {});

}  // namespace pengu
