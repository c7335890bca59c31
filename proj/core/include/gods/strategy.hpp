#pragma once

#include <map>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "gods/question.hpp"

namespace gods {

struct StrategyNode;
using StrategyNodePtr = std::shared_ptr<const StrategyNode>;

struct StrategyLeaf {
  RoleAssignment guess{};

  friend bool operator==(const StrategyLeaf&, const StrategyLeaf&) = default;
};

using StrategyChild = std::variant<StrategyNodePtr, StrategyLeaf>;

/// One interrogation step: whom to ask, what to ask, and where to go on each
/// observation the answer can produce.
struct StrategyNode {
  GodId target = GodId::A;
  QuestionPtr question;
  std::map<Label, StrategyChild> branches;
};

/// Adaptive decision tree over canonical observation labels, depth <= 3.
struct StrategyTree {
  StrategyNodePtr root;
};

bool strategy_equal(const StrategyTree& a, const StrategyTree& b);

/// "puzzle1" — three questions, persona-coin Random, paradoxes answered "no".
/// "puzzle3" — two questions, token-coin Random, paradoxes explode.
StrategyTree builtin_strategy(std::string_view name);
std::vector<std::string_view> builtin_strategy_names();

struct ValidationIssue {
  std::string where;    // label path from the root, e.g. "opaque/second"
  std::string message;
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;
  bool ok() const { return issues.empty(); }
};

/// Structural checks: depth <= 3, a branch for every channel-reachable token
/// label, no god asked again after it exploded, leaf guesses are bijections.
/// Boom branches are optional (never reachable unless explosions are on).
ValidationReport validate_strategy(const StrategyTree& tree);

/// Supplies one coin per question addressed to Random. Throws StrategyError
/// when exhausted.
class CoinSource {
 public:
  CoinSource() = default;
  explicit CoinSource(std::vector<Coin> coins) : coins_(std::move(coins)) {}

  Coin next();
  std::size_t consumed() const { return next_; }

 private:
  std::vector<Coin> coins_;
  std::size_t next_ = 0;
};

struct RunResult {
  Transcript transcript;
  LabelSeq labels;
  RoleAssignment guess{};
  std::vector<Coin> coins_used;
};

/// Walks the tree in one world: ask, record the raw answer, branch on the
/// label the new answer produces for the observer. Throws StrategyError on a
/// missing branch or coin exhaustion.
RunResult run_strategy(const StrategyTree& tree, const World& world, CoinSource& coins,
                       const RunConfig& config);

/// Line-oriented strategy file format:
///   ask <god> <question>            question = DSL text or builtin:<name>
///     on <label>:
///       ask ... | guess A=<role>,B=<role>,C=<role>
/// Children are indented deeper than their parent; '#' starts a comment.
/// Throws StrategyError (file shape) or ParseError (question syntax).
StrategyTree parse_strategy(std::string_view text);

/// Canonical text form; parse_strategy(render_strategy(t)) reproduces t.
std::string render_strategy(const StrategyTree& tree);

}  // namespace gods
