#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pengu/justify.hpp"
#include "pengu/knowledge_base.hpp"
#include "pengu/parser.hpp"
#include "pengu/semantics.hpp"

namespace pengu {

enum class SemanticsMode { Disponte, Repairs, All };

struct QueryOptions {
  SemanticsMode semantics = SemanticsMode::All;
  RemovableMode removable = RemovableMode::Probabilistic;
  JustifyOptions justify;
};

struct Timings {
  double justification_ms = 0.0;
  double disponte_ms = 0.0;
  double repair_ms = 0.0;
  double total_ms = 0.0;
};

struct QueryReport {
  std::string query;
  bool consistent = true;
  ProbReport prob;
  /// Present iff repair semantics were requested.
  std::optional<Verdict> verdict;
  bool no_repair = false;
  /// Absent only in oracle reports on KBs too large to enumerate subsets.
  std::optional<std::vector<Justification>> query_justifications;
  std::optional<std::vector<Justification>> incons_justifications;
  Timings timings;
  bool oracle = false;
};

/// Justifications, then DISPONTE probabilities, then Brave/IAR/AR.
QueryReport run_query(const KnowledgeBase& kb, const Query& q, const QueryOptions& options = {});

struct OracleOptions {
  std::size_t max_prob_axioms = kOracleMaxProbabilistic;
  SemanticsMode semantics = SemanticsMode::All;
  RemovableMode removable = RemovableMode::Probabilistic;
  TableauOptions tableau;
};

/// Same report from world and repair enumeration.
QueryReport run_oracle(const KnowledgeBase& kb, const Query& q, const OracleOptions& options = {});

/// Fixed field order; see README.
std::string to_json(const QueryReport& report);

/// Human-readable report. `consistency_only` drops the query lines.
std::string to_text(const QueryReport& report, const KnowledgeBase& kb, bool consistency_only = false);

/// Graphviz rendering of the BDD for P(Q, Cons).
std::string disponte_dot(const KnowledgeBase& kb, const JustificationBundle& bundle);

}  // namespace pengu
