#include <benchmark/benchmark.h>

#include "gods/impossibility.hpp"
#include "gods/verifier.hpp"

using namespace gods;

namespace {

void BM_EnumerateWorlds(benchmark::State& state) {
  for (auto _ : state) {
    auto worlds = enumerate_worlds();
    benchmark::DoNotOptimize(worlds);
  }
}
BENCHMARK(BM_EnumerateWorlds);

void BM_CanonicalizeDepth3(benchmark::State& state) {
  std::vector<std::vector<Answer>> raws;
  for (std::uint32_t bits = 0; bits < 8; ++bits) {
    std::vector<Answer> raw;
    for (int i = 0; i < 3; ++i) {
      raw.push_back(Answer::of((bits >> i) & 1u ? Token::Second : Token::First));
    }
    raws.push_back(std::move(raw));
  }
  for (auto _ : state) {
    for (const auto& raw : raws) {
      auto labels = canonicalize(raw);
      benchmark::DoNotOptimize(labels);
    }
  }
}
BENCHMARK(BM_CanonicalizeDepth3);

void BM_OpeningQuestionAllWorlds(benchmark::State& state) {
  QuestionPtr q = builtin_question("p3.q1");
  RunConfig config{RandomMode::TokenCoin, ParadoxPolicy::Explode};
  Transcript empty;
  for (auto _ : state) {
    for (const World& w : enumerate_worlds()) {
      if (w.role_of(GodId::A) == Role::RandomGod) {
        benchmark::DoNotOptimize(answer_question(*q, w, GodId::A, Coin::Heads, config, empty));
      } else {
        benchmark::DoNotOptimize(answer_question(*q, w, GodId::A, std::nullopt, config, empty));
      }
    }
  }
}
BENCHMARK(BM_OpeningQuestionAllWorlds);

void BM_VerifyPuzzle1(benchmark::State& state) {
  StrategyTree tree = builtin_strategy("puzzle1");
  RunConfig config{RandomMode::BoolosCoin, ParadoxPolicy::AnswerNo};
  for (auto _ : state) {
    auto report = verify_strategy(tree, config, "puzzle1");
    benchmark::DoNotOptimize(report);
  }
}
BENCHMARK(BM_VerifyPuzzle1);

void BM_VerifyPuzzle3(benchmark::State& state) {
  StrategyTree tree = builtin_strategy("puzzle3");
  RunConfig config{RandomMode::TokenCoin, ParadoxPolicy::Explode};
  for (auto _ : state) {
    auto report = verify_strategy(tree, config, "puzzle3");
    benchmark::DoNotOptimize(report);
  }
}
BENCHMARK(BM_VerifyPuzzle3);

void BM_SearchSortRank(benchmark::State& state) {
  for (auto _ : state) {
    auto result = search_adaptive_solution(Channel::SortRank);
    benchmark::DoNotOptimize(result);
  }
}
BENCHMARK(BM_SearchSortRank);

void BM_SearchAbsoluteToken(benchmark::State& state) {
  for (auto _ : state) {
    auto result = search_adaptive_solution(Channel::AbsoluteToken);
    benchmark::DoNotOptimize(result);
  }
}
BENCHMARK(BM_SearchAbsoluteToken);

void BM_ProvePuzzle2(benchmark::State& state) {
  for (auto _ : state) {
    auto cert = prove_puzzle2_unsolvable();
    benchmark::DoNotOptimize(cert);
  }
}
BENCHMARK(BM_ProvePuzzle2);

}  // namespace

BENCHMARK_MAIN();
