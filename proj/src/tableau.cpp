#include "pengu/tableau.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "pengu/error.hpp"

namespace pengu {
namespace {

using ConceptId = std::int32_t;
using Deps = std::vector<std::uint32_t>;  // sorted branch levels
using TraceSet = std::vector<IdSet>;      // antichain of justifications

struct ConceptEntry {
  Concept::Kind kind = Concept::Kind::Top;
  std::int32_t symbol = -1;  // concept name or role
  std::vector<ConceptId> ops;
  ConceptId complement = -1;
};

/// Hash-consed NNF concepts. Ids are dense and stable for one compiled KB.
class ConceptTable {
 public:
  ConceptId intern(const Concept& c) {
    using K = Concept::Kind;
    std::int32_t symbol = -1;
    std::vector<ConceptId> ops;
    switch (c.kind()) {
      case K::Atomic: symbol = symbol_of(concept_names_, c.name()); break;
      case K::Some:
      case K::All: symbol = symbol_of(role_names_, c.role()); break;
      default: break;
    }
    for (const auto& op : c.operands()) ops.push_back(intern(op));
    return lookup_or_add(c.kind(), symbol, std::move(ops));
  }

  std::int32_t role_symbol(const std::string& role) { return symbol_of(role_names_, role); }

  void link_complements() {
    std::vector<char> state(entries_.size(), 0);
    for (ConceptId id = 0; id < static_cast<ConceptId>(entries_.size()); ++id) {
      resolve_complement(id, state);
    }
  }

  const ConceptEntry& operator[](ConceptId id) const { return entries_[static_cast<std::size_t>(id)]; }
  std::size_t size() const { return entries_.size(); }

 private:
  using Key = std::tuple<int, std::int32_t, std::vector<ConceptId>>;

  static std::int32_t symbol_of(std::map<std::string, std::int32_t>& names, const std::string& n) {
    auto [it, inserted] = names.emplace(n, static_cast<std::int32_t>(names.size()));
    return it->second;
  }

  ConceptId lookup_or_add(Concept::Kind kind, std::int32_t symbol, std::vector<ConceptId> ops) {
    Key key{static_cast<int>(kind), symbol, ops};
    if (auto it = index_.find(key); it != index_.end()) return it->second;
    auto id = static_cast<ConceptId>(entries_.size());
    entries_.push_back(ConceptEntry{kind, symbol, std::move(ops), -1});
    index_.emplace(std::move(key), id);
    return id;
  }

  ConceptId find(Concept::Kind kind, std::int32_t symbol, std::vector<ConceptId> ops) const {
    auto it = index_.find(Key{static_cast<int>(kind), symbol, std::move(ops)});
    return it == index_.end() ? -1 : it->second;
  }

  // Complement exists in the table only if every piece of it was interned.
  ConceptId resolve_complement(ConceptId id, std::vector<char>& state) {
    auto idx = static_cast<std::size_t>(id);
    if (state[idx]) return entries_[idx].complement;
    using K = Concept::Kind;
    const ConceptEntry e = entries_[idx];
    ConceptId result = -1;
    switch (e.kind) {
      case K::Atomic: result = find(K::Not, -1, {id}); break;
      case K::Not: result = e.ops[0]; break;
      case K::Top: result = find(K::Bottom, -1, {}); break;
      case K::Bottom: result = find(K::Top, -1, {}); break;
      case K::And:
      case K::Or:
      case K::Some:
      case K::All: {
        std::vector<ConceptId> ops;
        for (ConceptId op : e.ops) {
          ConceptId c = resolve_complement(op, state);
          if (c < 0) break;
          ops.push_back(c);
        }
        if (ops.size() != e.ops.size()) break;
        K dual = e.kind == K::And ? K::Or
               : e.kind == K::Or  ? K::And
               : e.kind == K::Some ? K::All
                                   : K::Some;
        result = find(dual, e.symbol, std::move(ops));
        break;
      }
    }
    state[idx] = 1;
    entries_[idx].complement = result;
    return result;
  }

  std::vector<ConceptEntry> entries_;
  std::map<Key, ConceptId> index_;
  std::map<std::string, std::int32_t> concept_names_;
  std::map<std::string, std::int32_t> role_names_;
};

Deps merge_deps(const Deps& a, const Deps& b) { return ids::unite(a, b); }

bool add_trace(TraceSet& set, IdSet j, std::uint32_t cap) {
  if (!ids::insert_minimal(set, std::move(j))) return false;
  if (set.size() > cap) {
    ids::sort_family(set);
    set.resize(cap);
  }
  return true;
}

TraceSet trace_product(const TraceSet& a, const TraceSet& b, std::uint32_t cap) {
  TraceSet out;
  for (const auto& x : a) {
    for (const auto& y : b) add_trace(out, ids::unite(x, y), cap);
  }
  return out;
}

const IdSet& best_trace(const TraceSet& set) {
  return *std::min_element(set.begin(), set.end(), ids::size_then_lex);
}

/// Concept in a node label with its tracing-function value τ.
struct TracedLabel {
  ConceptId cid = -1;
  TraceSet tau;
  Deps deps;
  bool done = false;             // ⊓, ⊔, ∃ applied
  std::uint32_t edges_seen = 0;  // ∀ applied to this many out-edges
};

struct TableauEdge {
  std::uint32_t from = 0;
  std::uint32_t to = 0;
  std::int32_t role = -1;
  TraceSet tau;
  Deps deps;
};

struct TableauNode {
  std::int32_t individual = -1;  // -1 for anonymous nodes
  std::int32_t parent = -1;
  std::vector<TracedLabel> labels;
  std::vector<std::int32_t> slot;  // concept id -> label index or -1
  std::vector<std::uint32_t> out_edges;
  bool gcis_added = false;
};

/// A closed branch: one clash justification and the branch points it used.
struct Clash {
  std::uint32_t node = 0;
  ConceptId cid = -1;
  IdSet justification;
  Deps deps;
};

struct State {
  std::vector<TableauNode> nodes;
  std::vector<TableauEdge> edges;
  std::uint32_t depth = 0;
};

enum class AxiomKind { Gci, Concept, Role };

struct CompiledAxiom {
  AxiomId id = 0;
  AxiomKind kind = AxiomKind::Gci;
  ConceptId cid = -1;  // GCI disjunction or asserted concept
  std::int32_t role = -1;
  std::int32_t subject = -1;
  std::int32_t object = -1;
};

}  // namespace

struct detail::CompiledKb {
  KnowledgeBase kb;
  TableauOptions options;
  ConceptTable table;
  std::vector<CompiledAxiom> axioms;
  std::int32_t individual_count = 0;
  mutable std::atomic<std::uint64_t> runs{0};
};

namespace {

class Run {
 public:
  Run(const detail::CompiledKb& c, const std::vector<char>& active)
      : c_(c), table_(c.table), active_(active), cap_(std::max<std::uint32_t>(1, c.options.max_traces)) {}

  std::optional<Clash> solve() {
    State s;
    std::vector<std::int32_t> node_of(static_cast<std::size_t>(c_.individual_count), -1);
    auto node_for = [&](std::int32_t ind) {
      auto& n = node_of[static_cast<std::size_t>(ind)];
      if (n < 0) n = static_cast<std::int32_t>(new_node(s, ind, -1));
      return static_cast<std::uint32_t>(n);
    };
    for (const auto& ax : c_.axioms) {
      if (!active_[ax.id]) continue;
      if (ax.kind == AxiomKind::Concept) node_for(ax.subject);
      if (ax.kind == AxiomKind::Role) {
        node_for(ax.subject);
        node_for(ax.object);
      }
    }
    // An empty domain is not allowed: a TBox alone still needs one element.
    if (s.nodes.empty()) new_node(s, -1, -1);
    for (const auto& ax : c_.axioms) {
      if (!active_[ax.id]) continue;
      if (ax.kind == AxiomKind::Concept) {
        if (auto clash = add_label(s, node_for(ax.subject), ax.cid, {{ax.id}}, {})) {
          return clash;
        }
      } else if (ax.kind == AxiomKind::Role) {
        add_edge(s, node_for(ax.subject), node_for(ax.object), ax.role, {{ax.id}}, {});
      }
    }
    return expand(s);
  }

 private:
  void tick() {
    if (++steps_ > c_.options.max_steps) {
      throw Error(ErrorKind::ResourceLimit,
                  "tableau exceeded " + std::to_string(c_.options.max_steps) +
                      " rule applications");
    }
  }

  std::uint32_t new_node(State& s, std::int32_t individual, std::int32_t parent) {
    if (s.nodes.size() >= c_.options.max_nodes) {
      throw Error(ErrorKind::ResourceLimit,
                  "tableau exceeded " + std::to_string(c_.options.max_nodes) + " nodes");
    }
    TableauNode n;
    n.individual = individual;
    n.parent = parent;
    n.slot.assign(table_.size(), -1);
    s.nodes.push_back(std::move(n));
    return static_cast<std::uint32_t>(s.nodes.size() - 1);
  }

  void add_edge(State& s, std::uint32_t from, std::uint32_t to, std::int32_t role, TraceSet tau,
                Deps deps) {
    s.edges.push_back(TableauEdge{from, to, role, std::move(tau), std::move(deps)});
    s.nodes[from].out_edges.push_back(static_cast<std::uint32_t>(s.edges.size() - 1));
  }

  Clash make_clash(std::uint32_t node, ConceptId cid, const TraceSet& a, const Deps& da,
                   const TraceSet* b, const Deps* db) {
    Clash clash;
    clash.node = node;
    clash.cid = cid;
    if (b) {
      clash.justification = best_trace(trace_product(a, *b, cap_));
      clash.deps = merge_deps(da, *db);
    } else {
      clash.justification = best_trace(a);
      clash.deps = da;
    }
    return clash;
  }

  std::optional<Clash> add_label(State& s, std::uint32_t node, ConceptId cid, TraceSet tau,
                                 Deps deps) {
    tick();
    const ConceptEntry& e = table_[cid];
    if (e.kind == Concept::Kind::Top) return std::nullopt;
    TableauNode& n = s.nodes[node];
    if (std::int32_t slot = n.slot[static_cast<std::size_t>(cid)]; slot >= 0) {
      // Merge only derivations that depend on no more choices than the label
      // already does, so the label's deps still cover every trace it holds.
      TracedLabel& existing = n.labels[static_cast<std::size_t>(slot)];
      if (ids::is_subset(deps, existing.deps)) {
        for (auto& j : tau) add_trace(existing.tau, std::move(j), cap_);
      }
      return std::nullopt;
    }
    if (e.kind == Concept::Kind::Bottom) {
      return make_clash(node, cid, tau, deps, nullptr, nullptr);
    }
    if (e.complement >= 0) {
      if (std::int32_t other = n.slot[static_cast<std::size_t>(e.complement)]; other >= 0) {
        const TracedLabel& o = n.labels[static_cast<std::size_t>(other)];
        return make_clash(node, cid, tau, deps, &o.tau, &o.deps);
      }
    }
    n.slot[static_cast<std::size_t>(cid)] = static_cast<std::int32_t>(n.labels.size());
    TracedLabel label;
    label.cid = cid;
    label.tau = std::move(tau);
    label.deps = std::move(deps);
    n.labels.push_back(std::move(label));
    return std::nullopt;
  }

  std::optional<Clash> apply_and(State& s, bool& changed) {
    for (std::uint32_t i = 0; i < s.nodes.size(); ++i) {
      for (std::size_t l = 0; l < s.nodes[i].labels.size(); ++l) {
        TracedLabel& label = s.nodes[i].labels[l];
        if (label.done || table_[label.cid].kind != Concept::Kind::And) continue;
        label.done = true;
        changed = true;
        const TraceSet tau = label.tau;
        const Deps deps = label.deps;
        for (ConceptId op : table_[label.cid].ops) {
          if (auto clash = add_label(s, i, op, tau, deps)) return clash;
        }
      }
    }
    return std::nullopt;
  }

  std::optional<Clash> apply_all(State& s, bool& changed) {
    for (std::uint32_t i = 0; i < s.nodes.size(); ++i) {
      for (std::size_t l = 0; l < s.nodes[i].labels.size(); ++l) {
        TracedLabel& label = s.nodes[i].labels[l];
        const ConceptEntry& e = table_[label.cid];
        if (e.kind != Concept::Kind::All) continue;
        const auto edge_count = static_cast<std::uint32_t>(s.nodes[i].out_edges.size());
        if (label.edges_seen == edge_count) continue;
        const std::uint32_t first = label.edges_seen;
        label.edges_seen = edge_count;
        const TraceSet tau = label.tau;
        const Deps deps = label.deps;
        for (std::uint32_t k = first; k < edge_count; ++k) {
          const TableauEdge& edge = s.edges[s.nodes[i].out_edges[k]];
          if (edge.role != e.symbol) continue;
          changed = true;
          std::uint32_t target = edge.to;
          TraceSet t = trace_product(tau, edge.tau, cap_);
          Deps d = merge_deps(deps, edge.deps);
          if (auto clash = add_label(s, target, e.ops[0], std::move(t), std::move(d))) {
            return clash;
          }
        }
      }
    }
    return std::nullopt;
  }

  std::optional<Clash> apply_gcis(State& s, bool& changed) {
    for (std::uint32_t i = 0; i < s.nodes.size(); ++i) {
      if (s.nodes[i].gcis_added) continue;
      s.nodes[i].gcis_added = true;
      changed = true;
      for (const auto& ax : c_.axioms) {
        if (ax.kind != AxiomKind::Gci || !active_[ax.id]) continue;
        if (auto clash = add_label(s, i, ax.cid, {{ax.id}}, {})) return clash;
      }
    }
    return std::nullopt;
  }

  bool present(const TableauNode& n, ConceptId c) const {
    return table_[c].kind == Concept::Kind::Top || n.slot[static_cast<std::size_t>(c)] >= 0;
  }

  bool blocked(const State& s, std::uint32_t node) const {
    const TableauNode& n = s.nodes[node];
    if (n.individual >= 0 || n.parent < 0) return false;
    for (std::int32_t a = n.parent; a >= 0; a = s.nodes[static_cast<std::size_t>(a)].parent) {
      const TableauNode& anc = s.nodes[static_cast<std::size_t>(a)];
      bool superset = std::all_of(n.labels.begin(), n.labels.end(), [&](const TracedLabel& l) {
        return anc.slot[static_cast<std::size_t>(l.cid)] >= 0;
      });
      if (superset) return true;
    }
    return false;
  }

  std::optional<Clash> expand(State& s) {
    for (;;) {
      bool changed = false;
      do {
        changed = false;
        if (auto clash = apply_and(s, changed)) return clash;
        bool forall = false;
        if (auto clash = apply_all(s, forall)) return clash;
        changed = forall;
      } while (changed);

      bool gci = false;
      if (auto clash = apply_gcis(s, gci)) return clash;
      if (gci) continue;

      // ⊔-rule on the first open disjunction.
      bool branched = false;
      std::optional<Clash> outcome;
      for (std::uint32_t i = 0; i < s.nodes.size() && !branched; ++i) {
        for (std::size_t l = 0; l < s.nodes[i].labels.size(); ++l) {
          TracedLabel& label = s.nodes[i].labels[l];
          if (label.done || table_[label.cid].kind != Concept::Kind::Or) continue;
          const auto& ops = table_[label.cid].ops;
          if (std::any_of(ops.begin(), ops.end(),
                          [&](ConceptId op) { return present(s.nodes[i], op); })) {
            label.done = true;
            continue;
          }
          outcome = branch(s, i, l);
          branched = true;
          break;
        }
      }
      if (branched) return outcome;

      // ∃-rule on the first unblocked node.
      bool created = false;
      for (std::uint32_t i = 0; i < s.nodes.size() && !created; ++i) {
        bool checked_block = false;
        for (std::size_t l = 0; l < s.nodes[i].labels.size(); ++l) {
          const TracedLabel& label = s.nodes[i].labels[l];
          const ConceptEntry& e = table_[label.cid];
          if (label.done || e.kind != Concept::Kind::Some) continue;
          if (!checked_block) {
            if (blocked(s, i)) break;
            checked_block = true;
          }
          s.nodes[i].labels[l].done = true;
          if (has_witness(s, i, e.symbol, e.ops[0])) continue;
          tick();
          const TraceSet tau = s.nodes[i].labels[l].tau;
          const Deps deps = s.nodes[i].labels[l].deps;
          std::uint32_t child = new_node(s, -1, static_cast<std::int32_t>(i));
          add_edge(s, i, child, e.symbol, tau, deps);
          if (auto clash = add_label(s, child, e.ops[0], tau, deps)) return clash;
          created = true;
          break;
        }
      }
      if (created) continue;
      return std::nullopt;
    }
  }

  bool has_witness(const State& s, std::uint32_t node, std::int32_t role, ConceptId filler) const {
    for (std::uint32_t k : s.nodes[node].out_edges) {
      const TableauEdge& edge = s.edges[k];
      if (edge.role == role && present(s.nodes[edge.to], filler)) return true;
    }
    return false;
  }

  std::optional<Clash> branch(State& s, std::uint32_t node, std::size_t label_index) {
    TracedLabel& label = s.nodes[node].labels[label_index];
    label.done = true;
    const std::vector<ConceptId> ops = table_[label.cid].ops;
    const TraceSet tau = label.tau;
    const std::uint32_t level = s.depth++;
    const Deps branch_deps = merge_deps(label.deps, Deps{level});

    // Alternatives that clash on arrival need no copy of the state.
    std::vector<std::optional<Clash>> immediate(ops.size());
    std::size_t last_open = ops.size();
    for (std::size_t k = 0; k < ops.size(); ++k) {
      const ConceptEntry& e = table_[ops[k]];
      const TableauNode& n = s.nodes[node];
      if (e.kind == Concept::Kind::Bottom) {
        immediate[k] = make_clash(node, ops[k], tau, branch_deps, nullptr, nullptr);
      } else if (e.complement >= 0 && n.slot[static_cast<std::size_t>(e.complement)] >= 0) {
        const TracedLabel& o = n.labels[static_cast<std::size_t>(n.slot[static_cast<std::size_t>(e.complement)])];
        immediate[k] = make_clash(node, ops[k], tau, branch_deps, &o.tau, &o.deps);
      } else {
        last_open = k;
      }
    }

    std::vector<Clash> closed;
    for (std::size_t k = 0; k < ops.size(); ++k) {
      std::optional<Clash> result;
      if (immediate[k]) {
        result = std::move(immediate[k]);
      } else {
        State copy;
        State* target = &s;
        if (k != last_open) {
          copy = s;
          target = &copy;
        }
        result = add_label(*target, node, ops[k], tau, branch_deps);
        if (!result) result = expand(*target);
        if (!result) return std::nullopt;
      }
      if (!ids::contains(result->deps, level)) return result;  // backjump
      closed.push_back(std::move(*result));
    }

    Clash joined;
    joined.node = node;
    for (const auto& c : closed) {
      joined.justification = ids::unite(joined.justification, c.justification);
      joined.deps = merge_deps(joined.deps, c.deps);
    }
    joined.deps = ids::without(joined.deps, level);
    return joined;
  }

  const detail::CompiledKb& c_;
  const ConceptTable& table_;
  const std::vector<char>& active_;
  std::uint32_t cap_;
  std::uint64_t steps_ = 0;
};

std::vector<char> to_mask(const KnowledgeBase& kb, const IdSet& active) {
  std::vector<char> mask(kb.id_bound(), 0);
  for (AxiomId id : active) {
    if (!kb.contains(id)) {
      throw Error(ErrorKind::UnknownAxiomId, "unknown axiom id " + std::to_string(id));
    }
    mask[id] = 1;
  }
  return mask;
}

}  // namespace

Tableau::Tableau(const KnowledgeBase& kb, TableauOptions options)
    : compiled_(std::make_unique<detail::CompiledKb>()) {
  detail::CompiledKb& c = *compiled_;
  c.kb = kb;
  c.options = options;
  std::map<std::string, std::int32_t> individuals;
  auto individual = [&](const std::string& name) {
    auto [it, inserted] = individuals.emplace(name, static_cast<std::int32_t>(individuals.size()));
    return it->second;
  };
  for (const auto& a : kb.axioms()) {
    CompiledAxiom ca;
    ca.id = a.id;
    if (const auto* g = std::get_if<Gci>(&a.axiom)) {
      ca.kind = AxiomKind::Gci;
      ca.cid = c.table.intern(Concept::disjunction({complement(g->sub), nnf(g->sup)}));
    } else if (const auto* as = std::get_if<ConceptAssertion>(&a.axiom)) {
      ca.kind = AxiomKind::Concept;
      ca.cid = c.table.intern(nnf(as->type));
      ca.subject = individual(as->individual);
    } else {
      const auto& r = std::get<RoleAssertion>(a.axiom);
      ca.kind = AxiomKind::Role;
      ca.role = c.table.role_symbol(r.role);
      ca.subject = individual(r.subject);
      ca.object = individual(r.object);
    }
    c.axioms.push_back(ca);
  }
  c.individual_count = static_cast<std::int32_t>(individuals.size());
  c.table.link_complements();
}

Tableau::~Tableau() = default;
Tableau::Tableau(Tableau&&) noexcept = default;
Tableau& Tableau::operator=(Tableau&&) noexcept = default;

const KnowledgeBase& Tableau::kb() const noexcept { return compiled_->kb; }

std::uint64_t Tableau::runs() const noexcept { return compiled_->runs.load(); }

bool Tableau::is_consistent() const { return is_consistent(compiled_->kb.ids()); }

bool Tableau::is_consistent(const IdSet& active) const {
  return !trace_inconsistency(active).has_value();
}

std::optional<IdSet> Tableau::trace_inconsistency(const IdSet& active) const {
  const auto mask = to_mask(compiled_->kb, active);
  ++compiled_->runs;
  Run run(*compiled_, mask);
  auto clash = run.solve();
  if (!clash) return std::nullopt;
  if (!clash->deps.empty() || !ids::is_subset(clash->justification, ids::make(active))) {
    throw Error(ErrorKind::InvariantViolation, "tableau produced an ill-formed justification");
  }
  return std::move(clash->justification);
}

std::optional<Justification> Tableau::find_justification(const IdSet& active) const {
  auto candidate = trace_inconsistency(active);
  if (!candidate) return std::nullopt;
  IdSet current = std::move(*candidate);
  const IdSet order = current;
  for (AxiomId id : order) {
    if (!ids::contains(current, id)) continue;
    if (auto smaller = trace_inconsistency(ids::without(current, id))) {
      current = std::move(*smaller);
    }
  }
  return current;
}

bool is_consistent(const KnowledgeBase& kb, TableauOptions options) {
  return Tableau(kb, options).is_consistent();
}

std::optional<Justification> find_one_incons_justification(const KnowledgeBase& kb,
                                                           TableauOptions options) {
  return Tableau(kb, options).find_justification(kb.ids());
}

}  // namespace pengu
