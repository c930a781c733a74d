#include "pengu/knowledge_base.hpp"

#include <sstream>

#include "pengu/error.hpp"

namespace pengu {

AxiomId KnowledgeBase::add(Axiom axiom, std::optional<double> probability, Origin origin) {
  if (probability && !(*probability > 0.0 && *probability < 1.0)) {
    std::ostringstream msg;
    msg << "probability " << *probability << " is outside the open interval (0, 1); "
        << "write the axiom without annotation to make it certain";
    throw Error(ErrorKind::ProbabilityOutOfRange, msg.str());
  }
  if (origin == Origin::FreshQuery && probability) {
    throw Error(ErrorKind::InvariantViolation, "fresh query axioms are always certain");
  }
  if (auto existing = find(axiom)) {
    throw Error(ErrorKind::DuplicateAxiom,
                "axiom duplicates axiom " + std::to_string(*existing) +
                    "; combine independent evidence p1, p2 as 1-(1-p1)(1-p2) :: E");
  }
  AxiomId id = next_id_;
  insert(AnnotatedAxiom{id, std::move(axiom), probability, origin});
  return id;
}

void KnowledgeBase::insert(AnnotatedAxiom a) {
  if (a.id >= next_id_) next_id_ = a.id + 1;
  if (index_.size() < next_id_) index_.resize(next_id_, -1);
  index_[a.id] = static_cast<std::int32_t>(axioms_.size());
  by_payload_.emplace(a.axiom, a.id);
  axioms_.push_back(std::move(a));
}

bool KnowledgeBase::contains(AxiomId id) const noexcept {
  return id < index_.size() && index_[id] >= 0;
}

const AnnotatedAxiom& KnowledgeBase::at(AxiomId id) const {
  if (!contains(id)) {
    throw Error(ErrorKind::UnknownAxiomId, "unknown axiom id " + std::to_string(id));
  }
  return axioms_[static_cast<std::size_t>(index_[id])];
}

std::optional<AxiomId> KnowledgeBase::find(const Axiom& axiom) const {
  auto it = by_payload_.find(axiom);
  if (it == by_payload_.end()) return std::nullopt;
  return it->second;
}

namespace {

template <class Pred>
IdSet collect(std::span<const AnnotatedAxiom> axioms, Pred pred) {
  IdSet out;
  for (const auto& a : axioms) {
    if (pred(a)) out.push_back(a.id);
  }
  return out;
}

}  // namespace

IdSet KnowledgeBase::ids() const {
  return collect(axioms_, [](const AnnotatedAxiom&) { return true; });
}
IdSet KnowledgeBase::tbox_ids() const {
  return collect(axioms_, [](const AnnotatedAxiom& a) { return is_tbox(a.axiom); });
}
IdSet KnowledgeBase::abox_ids() const {
  return collect(axioms_, [](const AnnotatedAxiom& a) { return is_abox(a.axiom); });
}
IdSet KnowledgeBase::probabilistic_ids() const {
  return collect(axioms_, [](const AnnotatedAxiom& a) { return !a.certain(); });
}
IdSet KnowledgeBase::certain_ids() const {
  return collect(axioms_, [](const AnnotatedAxiom& a) { return a.certain(); });
}
IdSet KnowledgeBase::fresh_ids() const {
  return collect(axioms_,
                 [](const AnnotatedAxiom& a) { return a.origin == Origin::FreshQuery; });
}

KnowledgeBase KnowledgeBase::restrict(const IdSet& keep) const {
  KnowledgeBase sub;
  for (AxiomId id : ids::make(keep)) sub.insert(at(id));
  return sub;
}

double world_probability(const KnowledgeBase& kb, const World& world) {
  World w{ids::make(world.selection)};
  for (AxiomId id : w.selection) {
    if (kb.at(id).certain()) {
      throw Error(ErrorKind::UnknownAxiomId,
                  "axiom " + std::to_string(id) + " is not probabilistic");
    }
  }
  double p = 1.0;
  for (const auto& a : kb.axioms()) {
    if (a.certain()) continue;
    p *= ids::contains(w.selection, a.id) ? *a.probability : 1.0 - *a.probability;
  }
  return p;
}

KnowledgeBase world_kb(const KnowledgeBase& kb, const World& world) {
  World w{ids::make(world.selection)};
  for (AxiomId id : w.selection) {
    if (kb.at(id).certain()) {
      throw Error(ErrorKind::UnknownAxiomId,
                  "axiom " + std::to_string(id) + " is not probabilistic");
    }
  }
  return kb.restrict(ids::unite(kb.certain_ids(), w.selection));
}

}  // namespace pengu
