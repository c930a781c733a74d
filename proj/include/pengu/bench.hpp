#pragma once

#include <optional>
#include <string_view>

#include "pengu/knowledge_base.hpp"
#include "pengu/parser.hpp"

namespace pengu {

enum class BenchSetting { S1, S2, S3, S4 };
enum class ProbMode { None, Assertional, All };

std::optional<BenchSetting> parse_bench_setting(std::string_view text);
std::optional<ProbMode> parse_prob_mode(std::string_view text);

struct BenchSpec {
  int n = 2;
  BenchSetting setting = BenchSetting::S1;
  ProbMode prob_mode = ProbMode::None;
  double p = 0.5;
};

inline constexpr int kBenchMinN = 2;
inline constexpr int kBenchMaxN = 16;

/// Chain KB: for i = 1..n, B{i-1} ⊑ Pi ⊓ Qi, Pi ⊑ Bi, Qi ⊑ Bi, then x:B0.
/// S2 adds B0 ⊑ ¬B1, S3 and S4 add Bn ⊑ ¬B{n-1}; S4 also adds a second
/// diamond C0 ⊑ C0_1 ⊓ C0_2, C0_1 ⊑ C1, C0_2 ⊑ C1, x:C0.
/// Throws std::out_of_range unless kBenchMinN <= n <= kBenchMaxN.
KnowledgeBase generate_bench(const BenchSpec& spec);

/// x:Bn, or x:C1 for S4.
Query bench_query(const BenchSpec& spec);

}  // namespace pengu
