#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gods/world.hpp"

namespace gods {

/// What the interrogator's observations carry.
///   SortRank      — the first word heard is opaque; ranks only become
///                   available once both words have been heard.
///   AbsoluteToken — the two words are distinguishable and nameable from the
///                   first answer on (control channel: the classic puzzle).
enum class Channel : std::uint8_t { SortRank, AbsoluteToken };

std::string_view to_string(Channel ch);

/// A god-order plus the coin tokens Random is forced to emit at whichever of
/// the first two questions address it.
struct CoinCase {
  int order = 0;                                // god-order index, 0..5
  std::array<std::optional<Token>, 2> forced{}; // set exactly at Random-target positions

  friend bool operator==(const CoinCase&, const CoinCase&) = default;
};

/// All cases for fixed first and second targets: one per (order, coin
/// combination over the Random-addressed positions among Q1 and Q2).
/// Distinct targets give 10 cases; a repeated target gives 12.
std::vector<CoinCase> enumerate_cases(GodId q1_target, GodId q2_target);

/// True iff some pair of raw token sequences that are global swaps of each
/// other both canonicalize to this class. Exactly one depth-3 class has this
/// property; it is the only class two coin-split cases of one order can share.
bool class_swap_symmetric(const LabelSeq& labels);

struct SearchStats {
  std::uint64_t target_maps = 0;       // target-choice combinations examined
  std::uint64_t answer_functions = 0;  // free-answer combinations enumerated
  std::uint64_t allocation_nodes = 0;  // class-allocation states explored
  std::uint64_t prunes = 0;            // allocations cut off by a class clash
};

/// One chosen answer for a non-Random respondent in the free-answer model.
struct AnswerChoice {
  int position = 0;
  std::vector<Token> transcript;  // raw answers heard before this one
  Token token = Token::First;
};

/// Per-case answer script inside a witness strategy.
struct CaseScript {
  int order = 0;
  std::vector<Token> coins;  // Random's tokens at the first two questions, in order drawn
  std::vector<AnswerChoice> choices;
};

/// A strategy found by the search: targets per observation prefix, answer
/// scripts per case, and the induced class -> god-order decoder.
struct AdaptiveWitness {
  GodId q1_target = GodId::A;
  std::map<LabelSeq, GodId> q2_targets;  // keyed by depth-1 label prefix
  std::map<LabelSeq, GodId> q3_targets;  // keyed by depth-2 label prefix
  std::vector<CaseScript> scripts;
  std::map<LabelSeq, int> class_to_order;
};

struct FeasibilityResult {
  Channel channel = Channel::SortRank;
  bool solvable = false;
  std::optional<AdaptiveWitness> witness;  // present iff solvable
  SearchStats stats;
};

struct SearchOptions {
  /// Restrict the second question's target (used for the same-target analysis).
  std::optional<GodId> q2_target;
};

/// Exhaustive search over depth-3 adaptive strategies in the free-answer
/// model: Q1 goes to A (god relabeling makes this lossless), later targets
/// are functions of the observed label prefix, non-Random respondents answer
/// with freely chosen tokens per (case, position, transcript), and Random
/// emits its forced coin tokens — a third question to Random splits a case
/// into two sub-runs. Solvable iff some choice maps every full-depth class to
/// a single god-order.
FeasibilityResult search_adaptive_solution(Channel channel, SearchOptions options = {});

/// The counting argument for distinct first/second targets: 7 classes of
/// capacity versus 2 unsplit orders, one split order folded into the unique
/// swap-symmetric class, and 3 split orders needing 2 classes each.
struct PigeonholeSummary {
  GodId q1_target = GodId::A;
  GodId q2_target = GodId::B;
  int classes = 0;
  int cases = 0;
  int demand = 0;
  int unsplit_orders = 0;
  int split_orders = 0;
  int symmetric_classes = 0;
  LabelSeq shared_class;
  bool feasible = false;
};

PigeonholeSummary pigeonhole_summary(GodId q1_target, GodId q2_target);

/// The counting argument for a repeated target: in every depth-2 prefix both
/// orders with that god Random are present and claim a class each, leaving
/// one free slot in total for the four remaining orders.
struct SameTargetDeficit {
  GodId target = GodId::A;
  int needed = 0;
  int available = 0;
  std::map<LabelSeq, int> prefix_capacity;  // depth-3 classes per depth-2 prefix
  bool feasible = false;
};

SameTargetDeficit same_target_deficit(GodId target);

/// Combined certificate: full search, same-target search, and both counting
/// arguments, all under the sort-rank channel.
struct TheoremCertificate {
  bool unsolvable = false;
  FeasibilityResult full_search;
  FeasibilityResult same_target_search;
  PigeonholeSummary distinct_targets;
  SameTargetDeficit same_target;
  std::string scope;
  std::string coin_note;
};

TheoremCertificate prove_puzzle2_unsolvable();

}  // namespace gods
