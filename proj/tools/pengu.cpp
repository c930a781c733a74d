// pengu: probabilistic reasoning over possibly inconsistent ALC knowledge bases.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "pengu/bench.hpp"
#include "pengu/error.hpp"
#include "pengu/parser.hpp"
#include "pengu/report.hpp"

namespace {

enum Exit { kOk = 0, kInput = 2, kLimit = 3, kInternal = 4 };

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

pengu::KnowledgeBase load(const std::string& path) {
  try {
    return pengu::parse_kb(read_text(path));
  } catch (const pengu::ParseError& e) {
    throw InputError(path + ":" + e.what() + " [" + pengu::to_string(e.kind()) + "]");
  }
}

pengu::Query query_from(const std::string& text) {
  try {
    return pengu::parse_query(text);
  } catch (const pengu::ParseError& e) {
    throw InputError(std::string("query:") + e.what());
  }
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path);
  out << text;
}

const std::map<std::string, pengu::SemanticsMode> kSemantics{
    {"disponte", pengu::SemanticsMode::Disponte},
    {"repairs", pengu::SemanticsMode::Repairs},
    {"all", pengu::SemanticsMode::All}};
const std::map<std::string, pengu::RemovableMode> kRemovable{
    {"prob", pengu::RemovableMode::Probabilistic}, {"abox", pengu::RemovableMode::ABox}};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Probabilistic queries, justifications and repair semantics for ALC knowledge bases"};
  app.require_subcommand(1);

  std::string kb_path;
  std::string query_text;
  std::string format = "text";
  pengu::SemanticsMode semantics = pengu::SemanticsMode::All;
  pengu::RemovableMode removable = pengu::RemovableMode::Probabilistic;
  std::size_t max_justifications = 0;
  std::uint64_t max_steps = pengu::TableauOptions{}.max_steps;
  std::size_t max_prob_axioms = pengu::kOracleMaxProbabilistic;
  std::string dot_path;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("kb", kb_path, "Knowledge base file")->required();
    cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("--max-steps", max_steps, "Tableau rule applications per consistency check")
        ->check(CLI::PositiveNumber);
  };

  auto* check = app.add_subcommand("check", "Consistency, P(Incons) and inconsistency justifications");
  add_common(check);

  auto* query = app.add_subcommand("query", "Answer a query");
  add_common(query);
  query->add_option("-q,--query", query_text, "Query axiom, e.g. \"ClassAssertion(Bird, pingu)\"")->required();
  query->add_option("--semantics", semantics, "disponte, repairs or all")
      ->transform(CLI::CheckedTransformer(kSemantics));
  query->add_option("--removable", removable, "Axioms a repair may drop: prob or abox")
      ->transform(CLI::CheckedTransformer(kRemovable));
  query->add_option("--max-justifications", max_justifications,
                    "Stop after N justifications; probabilities become lower bounds")
      ->check(CLI::PositiveNumber);
  query->add_option("--dot", dot_path, "Write the BDD of P(Q, Cons) in Graphviz format");

  auto* oracle = app.add_subcommand("oracle", "Brute-force report by world and repair enumeration");
  add_common(oracle);
  oracle->add_option("-q,--query", query_text, "Query axiom")->required();
  oracle->add_option("--semantics", semantics, "disponte, repairs or all")
      ->transform(CLI::CheckedTransformer(kSemantics));
  oracle->add_option("--removable", removable, "prob or abox")->transform(CLI::CheckedTransformer(kRemovable));
  oracle->add_option("--max-prob-axioms", max_prob_axioms, "Largest number of probabilistic axioms to enumerate")
      ->check(CLI::Range(std::size_t{0}, pengu::kOracleMaxProbabilistic));

  auto* bench = app.add_subcommand("bench", "Synthetic benchmarks");
  bench->require_subcommand(1);
  auto* gen = bench->add_subcommand("gen", "Generate a chain KB");
  int n = 2;
  std::string setting = "s1";
  std::string prob_mode = "none";
  double p = 0.5;
  std::string out_path;
  gen->add_option("--n", n, "Chain length")->required();
  gen->add_option("--setting", setting, "s1, s2, s3 or s4")->check(CLI::IsMember({"s1", "s2", "s3", "s4"}));
  gen->add_option("--prob-mode", prob_mode, "none, assertional or all")
      ->check(CLI::IsMember({"none", "assertional", "all"}));
  gen->add_option("--p", p, "Probability of the annotated axioms");
  gen->add_option("-o,--output", out_path, "Output file (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kInput;
  }

  try {
    pengu::TableauOptions tableau;
    tableau.max_steps = max_steps;
    if (*gen) {
      if (!(p > 0.0 && p < 1.0)) throw InputError("--p must satisfy 0 < p < 1");
      pengu::BenchSpec spec{n, *pengu::parse_bench_setting(setting), *pengu::parse_prob_mode(prob_mode), p};
      pengu::KnowledgeBase kb;
      try {
        kb = pengu::generate_bench(spec);
      } catch (const std::out_of_range& e) {
        throw InputError(e.what());
      }
      write_output(out_path, pengu::serialize_kb(kb));
      if (!out_path.empty() && out_path != "-") {
        std::cout << "wrote " << kb.size() << " axioms to " << out_path
                  << "; query: " << pengu::to_string(pengu::bench_query(spec)) << "\n";
      }
      return kOk;
    }

    const pengu::KnowledgeBase kb = load(kb_path);
    pengu::QueryReport report;
    bool consistency_only = false;
    if (*check || *query) {
      pengu::Query q = pengu::IsConsistentQuery{};
      pengu::QueryOptions options;
      options.justify.tableau = tableau;
      if (*query) {
        q = query_from(query_text);
        options.semantics = semantics;
        options.removable = removable;
        if (max_justifications > 0) options.justify.max_justifications = max_justifications;
      } else {
        options.semantics = pengu::SemanticsMode::Disponte;
        consistency_only = true;
      }
      report = pengu::run_query(kb, q, options);
      if (!dot_path.empty()) {
        write_output(dot_path, pengu::disponte_dot(kb, pengu::all_justifications(kb, q, options.justify)));
      }
    } else {
      pengu::OracleOptions options;
      options.max_prob_axioms = max_prob_axioms;
      options.semantics = semantics;
      options.removable = removable;
      options.tableau = tableau;
      report = pengu::run_oracle(kb, query_from(query_text), options);
    }
    std::cout << (format == "json" ? pengu::to_json(report) : pengu::to_text(report, kb, consistency_only));
    return kOk;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  } catch (const pengu::Error& e) {
    std::cerr << "error: " << pengu::to_string(e.kind()) << ": " << e.what() << "\n";
    switch (e.kind()) {
      case pengu::ErrorKind::ResourceLimit:
      case pengu::ErrorKind::TooLarge: return kLimit;
      case pengu::ErrorKind::InvariantViolation: return kInternal;
      default: return kInput;
    }
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  }
}
