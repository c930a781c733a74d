#include "pengu/report.hpp"

#include <chrono>
#include <sstream>

#include "json.hpp"
#include "pengu/error.hpp"

namespace pengu {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

bool wants_repairs(SemanticsMode m) { return m != SemanticsMode::Disponte; }

}  // namespace

QueryReport run_query(const KnowledgeBase& kb, const Query& q, const QueryOptions& options) {
  const auto start = Clock::now();
  QueryReport r;
  r.query = to_string(q);

  auto phase = Clock::now();
  JustificationBundle bundle = all_justifications(kb, q, options.justify);
  r.timings.justification_ms = ms_since(phase);
  r.consistent = bundle.incons_justs.empty();

  phase = Clock::now();
  r.prob = prob_report(kb, bundle);
  r.timings.disponte_ms = ms_since(phase);

  phase = Clock::now();
  RepairChecker checker(kb, bundle, options.removable);
  r.no_repair = checker.no_repair();
  if (wants_repairs(options.semantics)) r.verdict = checker.verdict();
  r.timings.repair_ms = ms_since(phase);

  r.query_justifications = std::move(bundle.query_justs);
  r.incons_justifications = std::move(bundle.incons_justs);
  r.timings.total_ms = ms_since(start);
  return r;
}

QueryReport run_oracle(const KnowledgeBase& kb, const Query& q, const OracleOptions& options) {
  const auto start = Clock::now();
  QueryReport r;
  r.oracle = true;
  r.query = to_string(q);
  r.consistent = Tableau(kb, options.tableau).is_consistent();

  auto phase = Clock::now();
  if (kb.size() <= kOracleMaxAxioms) {
    auto bundle = oracle_all_justifications(kb, q, options.tableau);
    r.query_justifications = std::move(bundle.query_justs);
    r.incons_justifications = std::move(bundle.incons_justs);
  }
  r.timings.justification_ms = ms_since(phase);

  phase = Clock::now();
  r.prob = oracle_world_probs(kb, q, options.max_prob_axioms, options.tableau);
  r.timings.disponte_ms = ms_since(phase);

  phase = Clock::now();
  if (wants_repairs(options.semantics)) {
    try {
      r.verdict = oracle_verdict(kb, q, options.removable, options.tableau);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NoRepair) throw;
      r.verdict = Verdict::NotEntailed;
      r.no_repair = true;
    }
  } else {
    r.no_repair = oracle_repairs(kb, options.removable, options.tableau).empty();
  }
  r.timings.repair_ms = ms_since(phase);
  r.timings.total_ms = ms_since(start);
  return r;
}

std::string to_json(const QueryReport& r) {
  using json = nlohmann::ordered_json;
  auto family = [](const std::optional<std::vector<Justification>>& f) {
    return f ? json(*f) : json(nullptr);
  };
  json j;
  j["query"] = r.query;
  j["consistent"] = r.consistent;
  j["p_incons"] = r.prob.p_incons;
  j["p_cons"] = r.prob.p_cons;
  j["p_q_and_cons"] = r.prob.p_q_and_cons;
  j["p_c"] = r.prob.p_c ? json(*r.prob.p_c) : json(nullptr);
  j["p_c_undefined_reason"] = r.prob.p_c ? json(nullptr) : json("certainly inconsistent");
  j["verdict"] = r.verdict ? json(to_string(*r.verdict)) : json(nullptr);
  j["no_repair"] = r.no_repair;
  j["partial"] = r.prob.partial;
  j["query_justifications"] = family(r.query_justifications);
  j["incons_justifications"] = family(r.incons_justifications);
  j["timings"] = {{"justification_ms", r.timings.justification_ms},
                  {"disponte_ms", r.timings.disponte_ms},
                  {"repair_ms", r.timings.repair_ms},
                  {"total_ms", r.timings.total_ms}};
  if (r.oracle) j["oracle"] = true;
  return j.dump(2) + "\n";
}

namespace {

void write_family(std::ostream& out, const char* title,
                  const std::optional<std::vector<Justification>>& family, const KnowledgeBase& kb) {
  if (!family) {
    out << title << ": not enumerated\n";
    return;
  }
  out << title << " (" << family->size() << "):\n";
  for (const auto& j : *family) {
    out << "  " << ids::to_string(j) << "\n";
    for (AxiomId id : j) out << "    " << describe(kb.at(id)) << "\n";
  }
}

}  // namespace

std::string to_text(const QueryReport& r, const KnowledgeBase& kb, bool consistency_only) {
  std::ostringstream out;
  auto number = [](double v) {
    std::ostringstream s;
    s.precision(12);
    s << v;
    return s.str();
  };
  if (r.oracle) out << "(brute-force oracle)\n";
  if (!consistency_only) out << "query: " << r.query << "\n";
  out << "consistent: " << (r.consistent ? "yes" : "no") << "\n";
  out << "P(Incons) = " << number(r.prob.p_incons) << "\n";
  if (!consistency_only) {
    out << "P(Cons) = " << number(r.prob.p_cons) << "\n";
    out << "P(Q, Cons) = " << number(r.prob.p_q_and_cons) << "\n";
    out << "P_C(Q) = " << (r.prob.p_c ? number(*r.prob.p_c) : "undefined (certainly inconsistent)") << "\n";
    if (r.verdict) out << "verdict: " << to_string(*r.verdict) << "\n";
  }
  if (r.no_repair) out << "no repair: the non-removable axioms are inconsistent\n";
  if (r.prob.partial) out << "partial: justification limit reached, probabilities are lower bounds\n";
  if (!consistency_only) write_family(out, "query justifications", r.query_justifications, kb);
  write_family(out, "inconsistency justifications", r.incons_justifications, kb);
  out << "timings (ms): justification " << number(r.timings.justification_ms) << ", disponte "
      << number(r.timings.disponte_ms) << ", repair " << number(r.timings.repair_ms) << ", total "
      << number(r.timings.total_ms) << "\n";
  return out.str();
}

std::string disponte_dot(const KnowledgeBase& kb, const JustificationBundle& bundle) {
  BddManager bdd(kb.id_bound());
  VarMap vars;
  for (const auto& a : kb.axioms()) {
    vars[a.id] = a.certain() ? std::nullopt : std::optional<std::uint32_t>(a.id);
  }
  BddRef q = bdd.from_justifications(bundle.query_justs, vars);
  BddRef cons = bdd.negate(bdd.from_justifications(bundle.incons_justs, vars));
  return bdd.to_dot(bdd.conj(q, cons));
}

}  // namespace pengu
