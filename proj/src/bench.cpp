#include "pengu/bench.hpp"

#include <stdexcept>
#include <string>

namespace pengu {

std::optional<BenchSetting> parse_bench_setting(std::string_view text) {
  if (text == "s1" || text == "S1") return BenchSetting::S1;
  if (text == "s2" || text == "S2") return BenchSetting::S2;
  if (text == "s3" || text == "S3") return BenchSetting::S3;
  if (text == "s4" || text == "S4") return BenchSetting::S4;
  return std::nullopt;
}

std::optional<ProbMode> parse_prob_mode(std::string_view text) {
  if (text == "none") return ProbMode::None;
  if (text == "assertional") return ProbMode::Assertional;
  if (text == "all") return ProbMode::All;
  return std::nullopt;
}

namespace {

Concept named(const std::string& prefix, int i) { return Concept::atomic(prefix + std::to_string(i)); }

}  // namespace

KnowledgeBase generate_bench(const BenchSpec& spec) {
  if (spec.n < kBenchMinN || spec.n > kBenchMaxN) {
    throw std::out_of_range("n must be between " + std::to_string(kBenchMinN) + " and " +
                            std::to_string(kBenchMaxN) + ", got " + std::to_string(spec.n));
  }
  KnowledgeBase kb;
  auto add = [&](Axiom a) {
    bool probabilistic = spec.prob_mode == ProbMode::All ||
                         (spec.prob_mode == ProbMode::Assertional && is_abox(a));
    kb.add(std::move(a), probabilistic ? std::optional<double>(spec.p) : std::nullopt);
  };
  for (int i = 1; i <= spec.n; ++i) {
    add(Gci{named("B", i - 1), Concept::conjunction({named("P", i), named("Q", i)})});
    add(Gci{named("P", i), named("B", i)});
    add(Gci{named("Q", i), named("B", i)});
  }
  add(ConceptAssertion{"x", named("B", 0)});
  switch (spec.setting) {
    case BenchSetting::S1: break;
    case BenchSetting::S2: add(Gci{named("B", 0), Concept::negation(named("B", 1))}); break;
    case BenchSetting::S3:
    case BenchSetting::S4:
      add(Gci{named("B", spec.n), Concept::negation(named("B", spec.n - 1))});
      break;
  }
  if (spec.setting == BenchSetting::S4) {
    const Concept c0 = Concept::atomic("C0");
    const Concept c01 = Concept::atomic("C0_1");
    const Concept c02 = Concept::atomic("C0_2");
    const Concept c1 = Concept::atomic("C1");
    add(Gci{c0, Concept::conjunction({c01, c02})});
    add(Gci{c01, c1});
    add(Gci{c02, c1});
    add(ConceptAssertion{"x", c0});
  }
  return kb;
}

Query bench_query(const BenchSpec& spec) {
  if (spec.setting == BenchSetting::S4) return ConceptAssertionQuery{"x", Concept::atomic("C1")};
  return ConceptAssertionQuery{"x", named("B", spec.n)};
}

}  // namespace pengu
