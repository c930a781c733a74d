#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "pengu/id_set.hpp"

namespace pengu {

class BddManager;

/// Handle to a node of one BddManager.
class BddRef {
 public:
  BddRef() = default;
  friend bool operator==(const BddRef&, const BddRef&) = default;

 private:
  friend class BddManager;
  BddRef(std::uint32_t manager, std::uint32_t index) : manager_(manager), index_(index) {}
  std::uint32_t manager_ = 0;
  std::uint32_t index_ = 0;
};

/// Variable -> P(variable = 1).
using WeightMap = std::unordered_map<std::uint32_t, double>;

/// Axiom id -> BDD variable; nullopt marks a certain axiom (constant true).
using VarMap = std::map<AxiomId, std::optional<std::uint32_t>>;

/// Reduced ordered BDDs with a unique table and a computed table. Variable
/// order is the variable index. Nodes live as long as the manager.
class BddManager {
 public:
  explicit BddManager(std::uint32_t variable_count = 0);

  std::uint32_t variable_count() const noexcept { return variable_count_; }
  /// Appends `count` variables after the existing ones; returns the first.
  std::uint32_t add_variables(std::uint32_t count);

  BddRef zero() const noexcept { return {id_, kZero}; }
  BddRef one() const noexcept { return {id_, kOne}; }
  /// Throws std::out_of_range for i >= variable_count().
  BddRef var(std::uint32_t i);

  BddRef conj(BddRef a, BddRef b);
  BddRef disj(BddRef a, BddRef b);
  BddRef negate(BddRef a);

  /// ⋁_J ⋀_{i∈J} X_var_of(i). Throws Error{UnmappedAxiom}.
  BddRef from_justifications(const std::vector<Justification>& justs, const VarMap& var_of);

  /// Weighted model count. Throws Error{MissingWeight}.
  double probability(BddRef f, const WeightMap& weights) const;

  bool is_zero(BddRef f) const;
  bool is_one(BddRef f) const;

  bool is_terminal(BddRef f) const;
  std::uint32_t top_var(BddRef f) const;
  BddRef low(BddRef f) const;
  BddRef high(BddRef f) const;

  /// Internal nodes reachable from f.
  std::size_t size(BddRef f) const;
  /// Internal nodes allocated so far.
  std::size_t node_count() const noexcept { return nodes_.size() - 2; }

  /// Graphviz rendering: solid edges to high, dashed edges to low.
  std::string to_dot(BddRef f) const;

 private:
  static constexpr std::uint32_t kZero = 0;
  static constexpr std::uint32_t kOne = 1;
  static constexpr std::uint32_t kTerminalVar = UINT32_MAX;

  enum class Op : std::uint8_t { And, Or, Not };

  struct Node {
    std::uint32_t var;
    std::uint32_t low;
    std::uint32_t high;
  };

  struct TripleHash {
    std::size_t operator()(const std::tuple<std::uint32_t, std::uint32_t, std::uint32_t>& k) const noexcept;
  };

  std::uint32_t check(BddRef f) const;
  std::uint32_t make(std::uint32_t var, std::uint32_t low, std::uint32_t high);
  std::uint32_t apply(Op op, std::uint32_t a, std::uint32_t b);
  std::uint32_t negate_rec(std::uint32_t a);

  std::uint32_t id_;
  std::uint32_t variable_count_;
  std::vector<Node> nodes_;
  using Triple = std::tuple<std::uint32_t, std::uint32_t, std::uint32_t>;
  std::unordered_map<Triple, std::uint32_t, TripleHash> unique_;
  std::unordered_map<Triple, std::uint32_t, TripleHash> computed_;
};

}  // namespace pengu
