#include "pengu/id_set.hpp"

#include <algorithm>
#include <iterator>

namespace pengu::ids {

IdSet make(std::vector<AxiomId> raw) {
  std::sort(raw.begin(), raw.end());
  raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
  return raw;
}

bool contains(const IdSet& s, AxiomId id) {
  return std::binary_search(s.begin(), s.end(), id);
}

bool is_subset(const IdSet& sub, const IdSet& super) {
  if (sub.size() > super.size()) return false;
  return std::includes(super.begin(), super.end(), sub.begin(), sub.end());
}

bool disjoint(const IdSet& a, const IdSet& b) {
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i == *j) return false;
    if (*i < *j) ++i; else ++j;
  }
  return true;
}

IdSet unite(const IdSet& a, const IdSet& b) {
  IdSet out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

IdSet intersect(const IdSet& a, const IdSet& b) {
  IdSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

IdSet minus(const IdSet& a, const IdSet& b) {
  IdSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

IdSet without(const IdSet& s, AxiomId id) {
  IdSet out;
  out.reserve(s.size());
  for (AxiomId x : s) {
    if (x != id) out.push_back(x);
  }
  return out;
}

bool size_then_lex(const IdSet& a, const IdSet& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

bool insert_minimal(std::vector<IdSet>& family, IdSet candidate) {
  for (const auto& member : family) {
    if (is_subset(member, candidate)) return false;
  }
  std::erase_if(family, [&](const IdSet& m) { return is_subset(candidate, m); });
  family.push_back(std::move(candidate));
  return true;
}

void sort_family(std::vector<IdSet>& family) {
  std::sort(family.begin(), family.end(), size_then_lex);
}

std::string to_string(const IdSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(s[i]);
  }
  out += '}';
  return out;
}

}  // namespace pengu::ids
