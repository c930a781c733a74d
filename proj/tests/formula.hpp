#pragma once

#include <cstdint>
#include <memory>
#include <random>
#include <vector>

#include "pengu/bdd.hpp"

namespace pengu::test {

/// Random Boolean formula with an explicit truth table, used to check the
/// BDD engine against direct evaluation.
struct Formula {
  enum class Kind { Var, Not, And, Or } kind = Kind::Var;
  std::uint32_t var = 0;
  std::shared_ptr<Formula> a, b;

  bool eval(std::uint32_t assignment) const {
    switch (kind) {
      case Kind::Var: return assignment >> var & 1u;
      case Kind::Not: return !a->eval(assignment);
      case Kind::And: return a->eval(assignment) && b->eval(assignment);
      case Kind::Or: return a->eval(assignment) || b->eval(assignment);
    }
    return false;
  }

  std::vector<char> truth_table(std::uint32_t vars) const {
    std::vector<char> tt(std::size_t{1} << vars);
    for (std::uint32_t m = 0; m < tt.size(); ++m) tt[m] = eval(m);
    return tt;
  }

  BddRef build(BddManager& m) const {
    switch (kind) {
      case Kind::Var: return m.var(var);
      case Kind::Not: return m.negate(a->build(m));
      case Kind::And: return m.conj(a->build(m), b->build(m));
      case Kind::Or: return m.disj(a->build(m), b->build(m));
    }
    return m.zero();
  }

  /// Same function, different construction: commuted operands and
  /// De Morgan rewriting of every Or.
  BddRef build_rewritten(BddManager& m) const {
    switch (kind) {
      case Kind::Var: return m.var(var);
      case Kind::Not: return m.negate(a->build_rewritten(m));
      case Kind::And: return m.conj(b->build_rewritten(m), a->build_rewritten(m));
      case Kind::Or:
        return m.negate(m.conj(m.negate(b->build_rewritten(m)), m.negate(a->build_rewritten(m))));
    }
    return m.zero();
  }
};

inline std::shared_ptr<Formula> random_formula(std::mt19937_64& rng, std::uint32_t vars, int depth) {
  auto f = std::make_shared<Formula>();
  std::uniform_int_distribution<int> pick(0, depth <= 0 ? 0 : 3);
  int k = pick(rng);
  if (k == 0) {
    f->kind = Formula::Kind::Var;
    f->var = std::uniform_int_distribution<std::uint32_t>(0, vars - 1)(rng);
  } else if (k == 1) {
    f->kind = Formula::Kind::Not;
    f->a = random_formula(rng, vars, depth - 1);
  } else {
    f->kind = k == 2 ? Formula::Kind::And : Formula::Kind::Or;
    f->a = random_formula(rng, vars, depth - 1);
    f->b = random_formula(rng, vars, depth - 1);
  }
  return f;
}

/// Shannon expansion straight from a truth table (bit i of the index is
/// variable i).
inline BddRef from_truth_table(BddManager& m, const std::vector<char>& tt, std::uint32_t vars,
                               std::uint32_t var = 0, std::uint32_t prefix = 0) {
  if (var == vars) return tt[prefix] ? m.one() : m.zero();
  BddRef low = from_truth_table(m, tt, vars, var + 1, prefix);
  BddRef high = from_truth_table(m, tt, vars, var + 1, prefix | (1u << var));
  BddRef x = m.var(var);
  return m.disj(m.conj(x, high), m.conj(m.negate(x), low));
}

inline double weighted_count(const std::vector<char>& tt, const std::vector<double>& w) {
  double total = 0.0;
  for (std::uint32_t m = 0; m < tt.size(); ++m) {
    if (!tt[m]) continue;
    double p = 1.0;
    for (std::uint32_t v = 0; v < w.size(); ++v) p *= (m >> v & 1u) ? w[v] : 1.0 - w[v];
    total += p;
  }
  return total;
}

}  // namespace pengu::test
