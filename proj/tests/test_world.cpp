#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "gods/world.hpp"

using namespace gods;

namespace {

std::vector<Answer> tokens(std::initializer_list<Token> ts) {
  std::vector<Answer> out;
  for (Token t : ts) out.push_back(Answer::of(t));
  return out;
}

LabelSeq labels(std::initializer_list<Label> ls) { return LabelSeq(ls); }

// Every answer sequence over {first, second, boom} up to the given length.
std::vector<std::vector<Answer>> all_answer_seqs(int max_len) {
  std::vector<std::vector<Answer>> out{{}};
  std::size_t level_start = 0;
  for (int len = 1; len <= max_len; ++len) {
    std::size_t level_end = out.size();
    for (std::size_t i = level_start; i < level_end; ++i) {
      for (int s = 0; s < 3; ++s) {
        auto seq = out[i];
        seq.push_back(s == 0   ? Answer::of(Token::First)
                      : s == 1 ? Answer::of(Token::Second)
                               : Answer::boom());
        out.push_back(std::move(seq));
      }
    }
    level_start = level_end;
  }
  return out;
}

std::vector<Answer> swap_tokens(const std::vector<Answer>& seq) {
  std::vector<Answer> out;
  for (const Answer& a : seq) out.push_back(a.is_boom() ? Answer::boom() : Answer::of(other(a.tok())));
  return out;
}

}  // namespace

TEST_CASE("twelve worlds, each god-order twice, no duplicate roles") {
  auto worlds = enumerate_worlds();
  REQUIRE(worlds.size() == 12);
  std::set<std::pair<int, bool>> distinct;
  std::map<int, int> per_order;
  for (const World& w : worlds) {
    CHECK(is_bijection(w.roles));
    distinct.insert({order_index(w.roles), w.yes_is_first});
    per_order[order_index(w.roles)]++;
  }
  CHECK(distinct.size() == 12);
  REQUIRE(per_order.size() == 6);
  for (const auto& [order, count] : per_order) CHECK(count == 2);

  World expected{{Role::TrueGod, Role::FalseGod, Role::RandomGod}, true};
  CHECK(std::count(worlds.begin(), worlds.end(), expected) == 1);

  // Documented order: (order index, yes_is_first) with false first.
  CHECK(worlds.front() == World{{Role::TrueGod, Role::FalseGod, Role::RandomGod}, false});
  CHECK(order_code(worlds.front().roles) == "TFR");
}

TEST_CASE("yes and no tokens follow the lexicon bit and stay distinct") {
  World yes_first{{Role::TrueGod, Role::FalseGod, Role::RandomGod}, true};
  World yes_second{{Role::TrueGod, Role::FalseGod, Role::RandomGod}, false};
  CHECK(yes_first.yes_token() == Token::First);
  CHECK(yes_second.yes_token() == Token::Second);
  for (const World& w : enumerate_worlds()) CHECK(w.yes_token() != w.no_token());
}

TEST_CASE("order index round trip") {
  for (int i = 0; i < 6; ++i) CHECK(order_index(order_from_index(i)) == i);
  CHECK(order_code(order_from_index(4)) == "RTF");
}

TEST_CASE("canonical labels of the basic shapes") {
  CHECK(canonicalize(tokens({Token::First, Token::First, Token::First})) ==
        labels({Label::Opaque, Label::Same, Label::Same}));
  CHECK(canonicalize(tokens({Token::Second, Token::Second, Token::Second})) ==
        labels({Label::Opaque, Label::Same, Label::Same}));
  CHECK(canonicalize(tokens({Token::First, Token::Second})) ==
        labels({Label::Opaque, Label::Second}));
  CHECK(canonicalize(tokens({Token::Second, Token::First})) ==
        labels({Label::Opaque, Label::First}));

  // An explosion is not a word: the next word is still the first one heard.
  std::vector<Answer> boom_then_token{Answer::boom(), Answer::of(Token::Second)};
  CHECK(canonicalize(boom_then_token) == labels({Label::Boom, Label::Opaque}));
}

TEST_CASE("canonicalize is deterministic, length preserving, prefix monotone") {
  for (const auto& seq : all_answer_seqs(5)) {
    auto full = canonicalize(seq);
    CHECK(full.size() == seq.size());
    CHECK(canonicalize(seq) == full);
    for (std::size_t cut = 0; cut < seq.size(); ++cut) {
      std::vector<Answer> prefix(seq.begin(), seq.begin() + static_cast<std::ptrdiff_t>(cut));
      auto prefix_labels = canonicalize(prefix);
      CHECK(std::equal(prefix_labels.begin(), prefix_labels.end(), full.begin()));
    }
  }
}

TEST_CASE("swap invariance holds exactly for rank-free label sequences") {
  for (const auto& seq : all_answer_seqs(6)) {
    if (seq.empty()) continue;
    auto c = canonicalize(seq);
    bool rank_free = std::none_of(c.begin(), c.end(), [](Label l) {
      return l == Label::First || l == Label::Second;
    });
    CHECK((canonicalize(swap_tokens(seq)) == c) == rank_free);
  }
}

TEST_CASE("observation class counts are 1, 3, 7") {
  CHECK(observation_classes(1) == std::vector<LabelSeq>{labels({Label::Opaque})});

  auto depth2 = observation_classes(2);
  std::set<LabelSeq> expect2{labels({Label::Opaque, Label::Same}),
                             labels({Label::Opaque, Label::First}),
                             labels({Label::Opaque, Label::Second})};
  CHECK(std::set<LabelSeq>(depth2.begin(), depth2.end()) == expect2);

  auto depth3 = observation_classes(3);
  std::set<LabelSeq> expect3{
      labels({Label::Opaque, Label::Same, Label::Same}),
      labels({Label::Opaque, Label::Same, Label::First}),
      labels({Label::Opaque, Label::Same, Label::Second}),
      labels({Label::Opaque, Label::Second, Label::First}),
      labels({Label::Opaque, Label::Second, Label::Second}),
      labels({Label::Opaque, Label::First, Label::First}),
      labels({Label::Opaque, Label::First, Label::Second}),
  };
  CHECK(std::set<LabelSeq>(depth3.begin(), depth3.end()) == expect3);

  CHECK(observation_classes(1).size() == 1);
  CHECK(observation_classes(2).size() == 3);
  CHECK(observation_classes(3).size() == 7);
  CHECK_THROWS_AS(observation_classes(0), std::invalid_argument);
}

TEST_CASE("every class is realized by some raw sequence") {
  for (int depth = 1; depth <= 4; ++depth) {
    std::set<LabelSeq> reached;
    for (std::uint32_t bits = 0; bits < (1u << depth); ++bits) {
      std::vector<Answer> raw;
      for (int i = 0; i < depth; ++i) {
        raw.push_back(Answer::of((bits >> i) & 1u ? Token::Second : Token::First));
      }
      reached.insert(canonicalize(raw));
    }
    for (const LabelSeq& c : observation_classes(depth)) CHECK(reached.count(c) == 1);
  }
}
