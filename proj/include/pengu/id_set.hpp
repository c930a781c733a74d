#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace pengu {

/// Dense, declaration-order axiom identifier. Doubles as the BDD variable index.
using AxiomId = std::uint32_t;

/// Sorted, duplicate-free set of axiom ids.
using IdSet = std::vector<AxiomId>;

/// A subset-minimal axiom set proving a query or the inconsistency.
using Justification = IdSet;

namespace ids {

IdSet make(std::vector<AxiomId> raw);
bool contains(const IdSet& s, AxiomId id);
bool is_subset(const IdSet& sub, const IdSet& super);
bool disjoint(const IdSet& a, const IdSet& b);
IdSet unite(const IdSet& a, const IdSet& b);
IdSet intersect(const IdSet& a, const IdSet& b);
IdSet minus(const IdSet& a, const IdSet& b);
IdSet without(const IdSet& s, AxiomId id);

/// Smaller sets first, then lexicographic. Used for every reported ordering.
bool size_then_lex(const IdSet& a, const IdSet& b);

/// Adds `candidate` to an antichain unless a subset is already present;
/// drops members that are strict supersets of it. Returns true if added.
bool insert_minimal(std::vector<IdSet>& family, IdSet candidate);

void sort_family(std::vector<IdSet>& family);

std::string to_string(const IdSet& s);

}  // namespace ids
}  // namespace pengu
