#include "gods/verifier.hpp"

#include <sstream>

#include "gods/errors.hpp"

namespace gods {

namespace {

// Walks every coin branch of the tree in one world. The tree asks Random at
// most three times, so the recursion depth is tiny.
void walk_world(const StrategyTree& tree, const World& world, const RunConfig& config,
                std::vector<Coin>& coins, std::vector<VerifiedRun>& out) {
  VerifiedRun run;
  run.world = world;
  run.coins = coins;
  CoinSource source(coins);
  try {
    RunResult r = run_strategy(tree, world, source, config);
    if (source.consumed() < coins.size()) {
      // This coin prefix over-provisions; the shorter prefix already covers it.
      return;
    }
    run.labels = std::move(r.labels);
    run.guess = r.guess;
    run.correct = run.guess == world.roles;
    out.push_back(std::move(run));
  } catch (const CoinExhaustedError&) {
    // The path needs one more coin than provided: branch on both values.
    for (Coin c : {Coin::Heads, Coin::Tails}) {
      coins.push_back(c);
      walk_world(tree, world, config, coins, out);
      coins.pop_back();
    }
  } catch (const StrategyError& e) {
    run.error = e.what();
    run.correct = false;
    out.push_back(std::move(run));
  } catch (const EvalError& e) {
    run.error = e.what();
    run.correct = false;
    out.push_back(std::move(run));
  }
}

}  // namespace

std::vector<std::pair<World, std::vector<Coin>>> enumerate_runs(const StrategyTree& tree,
                                                                const RunConfig& config) {
  std::vector<std::pair<World, std::vector<Coin>>> out;
  for (const World& world : enumerate_worlds()) {
    std::vector<VerifiedRun> runs;
    std::vector<Coin> coins;
    walk_world(tree, world, config, coins, runs);
    for (const VerifiedRun& r : runs) out.emplace_back(world, r.coins);
  }
  return out;
}

VerificationReport verify_strategy(const StrategyTree& tree, const RunConfig& config,
                                   std::string strategy_name) {
  VerificationReport report;
  report.strategy_name = std::move(strategy_name);
  report.config = config;
  for (const World& world : enumerate_worlds()) {
    std::vector<Coin> coins;
    walk_world(tree, world, config, coins, report.runs);
  }
  for (std::size_t i = 0; i < report.runs.size(); ++i) {
    const VerifiedRun& run = report.runs[i];
    if (!run.correct || !run.error.empty()) report.counterexamples.push_back(i);
    if (run.error.empty()) {
      report.class_table[run.labels].insert(order_index(run.world.roles));
    }
  }
  report.solved = report.counterexamples.empty();
  return report;
}

std::string outcome_table_text(const VerificationReport& report) {
  std::map<LabelSeq, std::map<int, std::set<std::string>>> grouped;
  for (const VerifiedRun& run : report.runs) {
    if (!run.error.empty()) continue;
    grouped[run.labels][order_index(run.world.roles)].insert(order_code(run.guess));
  }
  std::ostringstream out;
  for (const auto& [labels, orders] : grouped) {
    out << "[" << label_seq_string(labels) << "]";
    for (const auto& [order, guesses] : orders) {
      out << "  " << order_code(order_from_index(order)) << "->";
      bool first = true;
      for (const std::string& g : guesses) {
        if (!first) out << "|";
        out << g;
        first = false;
      }
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace gods
