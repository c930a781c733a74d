#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace pengu {

/// An ALC concept expression.
///
/// Concepts are immutable values; copies share their children. Equality and
/// ordering are structural and order-sensitive, so And(A, B) != And(B, A).
class Concept {
 public:
  enum class Kind { Atomic, Top, Bottom, Not, And, Or, Some, All };

  static Concept atomic(std::string name);
  static Concept top();
  static Concept bottom();
  static Concept negation(Concept operand);
  /// Requires at least two operands.
  static Concept conjunction(std::vector<Concept> operands);
  static Concept disjunction(std::vector<Concept> operands);
  static Concept some(std::string role, Concept filler);
  static Concept all(std::string role, Concept filler);

  Kind kind() const noexcept { return kind_; }
  /// Concept name for Atomic, role name for Some/All, empty otherwise.
  const std::string& name() const noexcept { return name_; }
  const std::string& role() const noexcept { return name_; }
  /// Operands of And/Or, the single operand of Not, the filler of Some/All.
  std::span<const Concept> operands() const noexcept;
  const Concept& operand() const;

  bool is_atomic() const noexcept { return kind_ == Kind::Atomic; }
  std::size_t depth() const noexcept;

  friend bool operator==(const Concept& a, const Concept& b);
  friend std::strong_ordering operator<=>(const Concept& a, const Concept& b);

 private:
  Concept(Kind kind, std::string name, std::vector<Concept> operands);

  Kind kind_ = Kind::Top;
  std::string name_;
  std::shared_ptr<const std::vector<Concept>> operands_;
};

/// Negation normal form: Not appears only directly above atomic concepts.
Concept nnf(const Concept& c);

/// nnf(Not(c)).
Concept complement(const Concept& c);

/// Functional-syntax rendering, e.g. `And(Person, Some(hasChild, Thing))`.
std::string to_string(const Concept& c);

// Shorthands used mostly by tests and generators.
inline Concept operator!(const Concept& c) { return Concept::negation(c); }
inline Concept operator&(const Concept& a, const Concept& b) {
  return Concept::conjunction({a, b});
}
inline Concept operator|(const Concept& a, const Concept& b) {
  return Concept::disjunction({a, b});
}

}  // namespace pengu
