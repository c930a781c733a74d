#pragma once

#include <compare>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "pengu/concept.hpp"
#include "pengu/id_set.hpp"

namespace pengu {

/// General concept inclusion `sub ⊑ sup`.
struct Gci {
  Concept sub;
  Concept sup;
  friend auto operator<=>(const Gci&, const Gci&) = default;
  friend bool operator==(const Gci&, const Gci&) = default;
};

/// `individual : type`.
struct ConceptAssertion {
  std::string individual;
  Concept type;
  friend auto operator<=>(const ConceptAssertion&, const ConceptAssertion&) = default;
  friend bool operator==(const ConceptAssertion&, const ConceptAssertion&) = default;
};

/// `(subject, object) : role`.
struct RoleAssertion {
  std::string role;
  std::string subject;
  std::string object;
  friend auto operator<=>(const RoleAssertion&, const RoleAssertion&) = default;
  friend bool operator==(const RoleAssertion&, const RoleAssertion&) = default;
};

using Axiom = std::variant<Gci, ConceptAssertion, RoleAssertion>;

inline bool is_tbox(const Axiom& a) { return std::holds_alternative<Gci>(a); }
inline bool is_abox(const Axiom& a) { return !is_tbox(a); }

enum class Origin { Source, FreshQuery };

struct AnnotatedAxiom {
  AxiomId id = 0;
  Axiom axiom;
  /// Absent means certain; otherwise strictly inside (0, 1).
  std::optional<double> probability;
  Origin origin = Origin::Source;

  bool certain() const noexcept { return !probability.has_value(); }
  friend bool operator==(const AnnotatedAxiom&, const AnnotatedAxiom&) = default;
};

/// A DISPONTE knowledge base: certain and probabilistic ALC axioms.
///
/// Axioms are stored in id order. Ids are dense for KBs built with add();
/// sub-KBs produced by world_kb() and restrict() keep the parent's ids.
class KnowledgeBase {
 public:
  /// Appends an axiom under the next id.
  /// Throws Error{DuplicateAxiom} or Error{ProbabilityOutOfRange}.
  AxiomId add(Axiom axiom, std::optional<double> probability = std::nullopt,
              Origin origin = Origin::Source);

  std::span<const AnnotatedAxiom> axioms() const noexcept { return axioms_; }
  std::size_t size() const noexcept { return axioms_.size(); }
  bool empty() const noexcept { return axioms_.empty(); }

  /// One past the largest id ever assigned; the BDD variable count for this KB.
  AxiomId id_bound() const noexcept { return next_id_; }

  bool contains(AxiomId id) const noexcept;
  /// Throws Error{UnknownAxiomId}.
  const AnnotatedAxiom& at(AxiomId id) const;
  std::optional<AxiomId> find(const Axiom& axiom) const;

  IdSet ids() const;
  IdSet tbox_ids() const;
  IdSet abox_ids() const;
  IdSet probabilistic_ids() const;
  IdSet certain_ids() const;
  IdSet fresh_ids() const;

  /// Sub-KB over `keep`, ids preserved. Throws Error{UnknownAxiomId}.
  KnowledgeBase restrict(const IdSet& keep) const;

  friend bool operator==(const KnowledgeBase& a, const KnowledgeBase& b) {
    return a.axioms_ == b.axioms_;
  }

 private:
  void insert(AnnotatedAxiom a);

  std::vector<AnnotatedAxiom> axioms_;
  std::vector<std::int32_t> index_;  // id -> position in axioms_, -1 if absent
  std::map<Axiom, AxiomId> by_payload_;
  AxiomId next_id_ = 0;
};

/// Probabilistic axioms whose Boolean variable is set to 1.
struct World {
  IdSet selection;
};

/// ∏ p_i over selected probabilistic axioms times ∏ (1 - p_i) over the rest.
double world_probability(const KnowledgeBase& kb, const World& w);

/// Certain axioms plus the selected probabilistic ones, ids preserved.
KnowledgeBase world_kb(const KnowledgeBase& kb, const World& w);

}  // namespace pengu
