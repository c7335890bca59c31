#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "gods/strategy.hpp"

namespace gods {

struct VerifiedRun {
  World world;
  std::vector<Coin> coins;
  LabelSeq labels;
  RoleAssignment guess{};
  bool correct = false;
  std::string error;  // non-empty when the run aborted (missing branch, ...)
};

struct VerificationReport {
  std::string strategy_name;
  RunConfig config{};
  bool solved = false;
  std::vector<VerifiedRun> runs;
  std::vector<std::size_t> counterexamples;       // indices into runs
  std::map<LabelSeq, std::set<int>> class_table;  // label sequence -> god-order indices
};

/// Every (world, coin sequence) the tree can encounter: all 12 worlds, and
/// both coin values branched each time the path addresses Random. Runs are
/// ordered by world enumeration order, then heads-first coin order.
std::vector<std::pair<World, std::vector<Coin>>> enumerate_runs(const StrategyTree& tree,
                                                                const RunConfig& config);

/// Exhaustive check. solved means every run's guess matches the world's role
/// assignment (the lexicon bit is not part of the task). Run errors become
/// counterexamples with a diagnostic rather than aborting the sweep.
VerificationReport verify_strategy(const StrategyTree& tree, const RunConfig& config,
                                   std::string strategy_name = {});

/// Runs grouped by full label sequence, with the god-orders and guesses that
/// reach each class.
std::string outcome_table_text(const VerificationReport& report);

}  // namespace gods
