#include "pengu/bdd.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <stdexcept>

#include "pengu/error.hpp"

namespace pengu {

namespace {
std::atomic<std::uint32_t> next_manager_id{1};
}

std::size_t BddManager::TripleHash::operator()(const Triple& k) const noexcept {
  std::uint64_t h = std::get<0>(k);
  h = h * 0x9E3779B97F4A7C15ull ^ std::get<1>(k);
  h = h * 0x9E3779B97F4A7C15ull ^ std::get<2>(k);
  return static_cast<std::size_t>(h ^ (h >> 29));
}

BddManager::BddManager(std::uint32_t variable_count)
    : id_(next_manager_id++), variable_count_(variable_count) {
  nodes_.push_back({kTerminalVar, kZero, kZero});
  nodes_.push_back({kTerminalVar, kOne, kOne});
}

std::uint32_t BddManager::add_variables(std::uint32_t count) {
  std::uint32_t first = variable_count_;
  variable_count_ += count;
  return first;
}

std::uint32_t BddManager::check(BddRef f) const {
  if (f.manager_ != id_ || f.index_ >= nodes_.size()) {
    throw Error(ErrorKind::ForeignRef, "BDD reference does not belong to this manager");
  }
  return f.index_;
}

std::uint32_t BddManager::make(std::uint32_t var, std::uint32_t low, std::uint32_t high) {
  if (low == high) return low;
  Triple key{var, low, high};
  if (auto it = unique_.find(key); it != unique_.end()) return it->second;
  auto index = static_cast<std::uint32_t>(nodes_.size());
  nodes_.push_back({var, low, high});
  unique_.emplace(key, index);
  return index;
}

BddRef BddManager::var(std::uint32_t i) {
  if (i >= variable_count_) {
    throw std::out_of_range("BDD variable " + std::to_string(i) + " out of range");
  }
  return {id_, make(i, kZero, kOne)};
}

std::uint32_t BddManager::apply(Op op, std::uint32_t a, std::uint32_t b) {
  if (op == Op::And) {
    if (a == kZero || b == kZero) return kZero;
    if (a == kOne) return b;
    if (b == kOne || a == b) return a;
  } else {
    if (a == kOne || b == kOne) return kOne;
    if (a == kZero) return b;
    if (b == kZero || a == b) return a;
  }
  if (a > b) std::swap(a, b);
  Triple key{static_cast<std::uint32_t>(op), a, b};
  if (auto it = computed_.find(key); it != computed_.end()) return it->second;
  const Node na = nodes_[a];
  const Node nb = nodes_[b];
  std::uint32_t v = std::min(na.var, nb.var);
  std::uint32_t a0 = na.var == v ? na.low : a;
  std::uint32_t a1 = na.var == v ? na.high : a;
  std::uint32_t b0 = nb.var == v ? nb.low : b;
  std::uint32_t b1 = nb.var == v ? nb.high : b;
  std::uint32_t low = apply(op, a0, b0);
  std::uint32_t high = apply(op, a1, b1);
  std::uint32_t r = make(v, low, high);
  computed_.emplace(key, r);
  return r;
}

std::uint32_t BddManager::negate_rec(std::uint32_t a) {
  if (a == kZero) return kOne;
  if (a == kOne) return kZero;
  Triple key{static_cast<std::uint32_t>(Op::Not), a, 0};
  if (auto it = computed_.find(key); it != computed_.end()) return it->second;
  const Node n = nodes_[a];
  std::uint32_t r = make(n.var, negate_rec(n.low), negate_rec(n.high));
  computed_.emplace(key, r);
  return r;
}

BddRef BddManager::conj(BddRef a, BddRef b) { return {id_, apply(Op::And, check(a), check(b))}; }
BddRef BddManager::disj(BddRef a, BddRef b) { return {id_, apply(Op::Or, check(a), check(b))}; }
BddRef BddManager::negate(BddRef a) { return {id_, negate_rec(check(a))}; }

BddRef BddManager::from_justifications(const std::vector<Justification>& justs,
                                       const VarMap& var_of) {
  std::uint32_t result = kZero;
  for (const auto& j : justs) {
    std::vector<std::uint32_t> vars;
    for (AxiomId id : j) {
      auto it = var_of.find(id);
      if (it == var_of.end()) {
        throw Error(ErrorKind::UnmappedAxiom, "axiom " + std::to_string(id) + " has no BDD variable");
      }
      if (!it->second) continue;
      if (*it->second >= variable_count_) {
        throw std::out_of_range("BDD variable " + std::to_string(*it->second) + " out of range");
      }
      vars.push_back(*it->second);
    }
    std::sort(vars.begin(), vars.end());
    vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
    std::uint32_t cube = kOne;
    for (auto v = vars.rbegin(); v != vars.rend(); ++v) cube = make(*v, kZero, cube);
    result = apply(Op::Or, result, cube);
  }
  return {id_, result};
}

double BddManager::probability(BddRef f, const WeightMap& weights) const {
  std::unordered_map<std::uint32_t, double> memo;
  auto rec = [&](auto& self, std::uint32_t n) -> double {
    if (n == kZero) return 0.0;
    if (n == kOne) return 1.0;
    if (auto it = memo.find(n); it != memo.end()) return it->second;
    const Node& node = nodes_[n];
    auto w = weights.find(node.var);
    if (w == weights.end()) {
      throw Error(ErrorKind::MissingWeight, "no weight for BDD variable " + std::to_string(node.var));
    }
    double p = w->second * self(self, node.high) + (1.0 - w->second) * self(self, node.low);
    memo.emplace(n, p);
    return p;
  };
  return rec(rec, check(f));
}

bool BddManager::is_zero(BddRef f) const { return check(f) == kZero; }
bool BddManager::is_one(BddRef f) const { return check(f) == kOne; }
bool BddManager::is_terminal(BddRef f) const { return check(f) <= kOne; }

std::uint32_t BddManager::top_var(BddRef f) const { return nodes_[check(f)].var; }
BddRef BddManager::low(BddRef f) const { return {id_, nodes_[check(f)].low}; }
BddRef BddManager::high(BddRef f) const { return {id_, nodes_[check(f)].high}; }

namespace {

template <class Nodes, class Visit>
void walk(const Nodes& nodes, std::uint32_t root, Visit visit) {
  std::vector<std::uint32_t> stack{root};
  std::vector<char> seen(nodes.size(), 0);
  while (!stack.empty()) {
    std::uint32_t n = stack.back();
    stack.pop_back();
    if (n <= 1 || seen[n]) continue;
    seen[n] = 1;
    visit(n);
    stack.push_back(nodes[n].high);
    stack.push_back(nodes[n].low);
  }
}

}  // namespace

std::size_t BddManager::size(BddRef f) const {
  std::size_t count = 0;
  walk(nodes_, check(f), [&](std::uint32_t) { ++count; });
  return count;
}

std::string BddManager::to_dot(BddRef f) const {
  std::ostringstream out;
  out << "digraph bdd {\n";
  out << "  n0 [shape=box, label=\"0\"];\n";
  out << "  n1 [shape=box, label=\"1\"];\n";
  walk(nodes_, check(f), [&](std::uint32_t n) {
    const Node& node = nodes_[n];
    out << "  n" << n << " [label=\"x" << node.var << "\"];\n";
    out << "  n" << n << " -> n" << node.high << ";\n";
    out << "  n" << n << " -> n" << node.low << " [style=dashed];\n";
  });
  out << "}\n";
  return out.str();
}

}  // namespace pengu
