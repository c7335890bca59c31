#pragma once

#include <map>
#include <string>
#include <vector>

#include "gods/impossibility.hpp"

namespace testsupport {

// Independent re-simulation of a search witness: walks every scripted
// scenario using only the witness contents (targets per prefix, per-scenario
// answer scripts, forced coins), and checks that the full observation class
// of every run decodes to the scenario's god-order. Nothing here touches the
// search machinery.
inline bool replay_witness_ok(gods::Channel channel, const gods::AdaptiveWitness& witness,
                              std::string* why = nullptr) {
  using namespace gods;
  auto fail = [&](const std::string& message) {
    if (why != nullptr) *why = message;
    return false;
  };
  auto labels_of = [&](const std::vector<Token>& raw) {
    LabelSeq out;
    if (channel == Channel::SortRank) {
      std::vector<Answer> answers;
      for (Token t : raw) answers.push_back(Answer::of(t));
      out = canonicalize(answers);
    } else {
      for (Token t : raw) out.push_back(t == Token::First ? Label::First : Label::Second);
    }
    return out;
  };

  if (witness.scripts.empty()) return fail("witness has no scripts");
  std::map<LabelSeq, int> seen_classes;

  for (const CaseScript& script : witness.scripts) {
    const RoleAssignment roles = order_from_index(script.order);
    // frontier of partial raw transcripts (forks when Q3 goes to Random)
    std::vector<std::pair<std::vector<Token>, std::size_t>> frontier{{{}, 0}};
    for (int pos = 0; pos < 3; ++pos) {
      std::vector<std::pair<std::vector<Token>, std::size_t>> next;
      for (auto& [raw, coins_used] : frontier) {
        GodId target = GodId::A;
        if (pos == 0) {
          target = witness.q1_target;
        } else {
          const auto& map = pos == 1 ? witness.q2_targets : witness.q3_targets;
          auto it = map.find(labels_of(raw));
          if (it == map.end()) return fail("witness lacks a target for a reachable prefix");
          target = it->second;
        }
        if (roles[static_cast<std::size_t>(target)] == Role::RandomGod) {
          if (pos < 2) {
            if (coins_used >= script.coins.size()) return fail("script ran out of coins");
            auto extended = raw;
            extended.push_back(script.coins[coins_used]);
            next.emplace_back(std::move(extended), coins_used + 1);
          } else {
            for (Token t : {Token::First, Token::Second}) {
              auto extended = raw;
              extended.push_back(t);
              next.emplace_back(std::move(extended), coins_used);
            }
          }
          continue;
        }
        bool found = false;
        for (const AnswerChoice& choice : script.choices) {
          if (choice.position == pos && choice.transcript == raw) {
            auto extended = raw;
            extended.push_back(choice.token);
            next.emplace_back(std::move(extended), coins_used);
            found = true;
            break;
          }
        }
        if (!found) return fail("script has no answer for a reachable position");
      }
      frontier = std::move(next);
    }
    for (const auto& [raw, coins_used] : frontier) {
      (void)coins_used;
      LabelSeq cls = labels_of(raw);
      auto decoded = witness.class_to_order.find(cls);
      if (decoded == witness.class_to_order.end()) return fail("reached class has no decoding");
      if (decoded->second != script.order) return fail("class decodes to the wrong order");
      auto [it, inserted] = seen_classes.emplace(cls, script.order);
      if (!inserted && it->second != script.order) {
        return fail("two orders reach the same class");
      }
    }
  }
  return true;
}

}  // namespace testsupport
