#include "pengu/concept.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace pengu {

Concept::Concept(Kind kind, std::string name, std::vector<Concept> operands)
    : kind_(kind), name_(std::move(name)) {
  if (!operands.empty()) {
    operands_ = std::make_shared<const std::vector<Concept>>(std::move(operands));
  }
}

Concept Concept::atomic(std::string name) { return {Kind::Atomic, std::move(name), {}}; }
Concept Concept::top() { return {Kind::Top, {}, {}}; }
Concept Concept::bottom() { return {Kind::Bottom, {}, {}}; }

Concept Concept::negation(Concept operand) {
  std::vector<Concept> ops;
  ops.push_back(std::move(operand));
  return {Kind::Not, {}, std::move(ops)};
}

Concept Concept::conjunction(std::vector<Concept> operands) {
  if (operands.size() < 2) throw std::invalid_argument("And needs at least two operands");
  return {Kind::And, {}, std::move(operands)};
}

Concept Concept::disjunction(std::vector<Concept> operands) {
  if (operands.size() < 2) throw std::invalid_argument("Or needs at least two operands");
  return {Kind::Or, {}, std::move(operands)};
}

Concept Concept::some(std::string role, Concept filler) {
  std::vector<Concept> ops;
  ops.push_back(std::move(filler));
  return {Kind::Some, std::move(role), std::move(ops)};
}

Concept Concept::all(std::string role, Concept filler) {
  std::vector<Concept> ops;
  ops.push_back(std::move(filler));
  return {Kind::All, std::move(role), std::move(ops)};
}

std::span<const Concept> Concept::operands() const noexcept {
  if (!operands_) return {};
  return {operands_->data(), operands_->size()};
}

const Concept& Concept::operand() const {
  assert(operands_ && operands_->size() == 1);
  return operands_->front();
}

std::size_t Concept::depth() const noexcept {
  std::size_t d = 0;
  for (const auto& op : operands()) d = std::max(d, op.depth());
  return operands_ ? d + 1 : 0;
}

bool operator==(const Concept& a, const Concept& b) {
  return (a <=> b) == std::strong_ordering::equal;
}

std::strong_ordering operator<=>(const Concept& a, const Concept& b) {
  if (auto c = a.kind_ <=> b.kind_; c != 0) return c;
  if (auto c = a.name_ <=> b.name_; c != 0) return c;
  if (a.operands_ == b.operands_) return std::strong_ordering::equal;
  auto lhs = a.operands();
  auto rhs = b.operands();
  return std::lexicographical_compare_three_way(lhs.begin(), lhs.end(), rhs.begin(),
                                                rhs.end());
}

namespace {

Concept nnf_of(const Concept& c, bool negated) {
  using K = Concept::Kind;
  switch (c.kind()) {
    case K::Atomic:
      return negated ? Concept::negation(c) : c;
    case K::Top:
      return negated ? Concept::bottom() : c;
    case K::Bottom:
      return negated ? Concept::top() : c;
    case K::Not:
      return nnf_of(c.operand(), !negated);
    case K::And:
    case K::Or: {
      std::vector<Concept> ops;
      ops.reserve(c.operands().size());
      for (const auto& op : c.operands()) ops.push_back(nnf_of(op, negated));
      bool conj = (c.kind() == K::And) != negated;
      return conj ? Concept::conjunction(std::move(ops))
                  : Concept::disjunction(std::move(ops));
    }
    case K::Some:
    case K::All: {
      bool existential = (c.kind() == K::Some) != negated;
      Concept filler = nnf_of(c.operand(), negated);
      return existential ? Concept::some(c.role(), std::move(filler))
                         : Concept::all(c.role(), std::move(filler));
    }
  }
  return c;
}

void render(const Concept& c, std::string& out) {
  using K = Concept::Kind;
  auto list = [&](const char* head, bool with_role) {
    out += head;
    out += '(';
    if (with_role) {
      out += c.role();
      out += ", ";
    }
    bool first = true;
    for (const auto& op : c.operands()) {
      if (!first) out += ", ";
      first = false;
      render(op, out);
    }
    out += ')';
  };
  switch (c.kind()) {
    case K::Atomic: out += c.name(); break;
    case K::Top: out += "Thing"; break;
    case K::Bottom: out += "Nothing"; break;
    case K::Not: list("Not", false); break;
    case K::And: list("And", false); break;
    case K::Or: list("Or", false); break;
    case K::Some: list("Some", true); break;
    case K::All: list("All", true); break;
  }
}

}  // namespace

Concept nnf(const Concept& c) { return nnf_of(c, false); }

Concept complement(const Concept& c) { return nnf_of(c, true); }

std::string to_string(const Concept& c) {
  std::string out;
  render(c, out);
  return out;
}

}  // namespace pengu
