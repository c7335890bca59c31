#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace gods {

enum class GodId : std::uint8_t { A = 0, B = 1, C = 2 };
enum class Role : std::uint8_t { TrueGod = 0, FalseGod = 1, RandomGod = 2 };

/// A god's answer word, identified only by its position under the universal
/// sorting rule. The words themselves are never modeled; with exactly two
/// words, their sort ranks are all an ignorant listener can ever pin down.
enum class Token : std::uint8_t { First = 0, Second = 1 };

constexpr std::array<GodId, 3> kAllGods{GodId::A, GodId::B, GodId::C};
constexpr std::array<Role, 3> kAllRoles{Role::TrueGod, Role::FalseGod, Role::RandomGod};

constexpr Token other(Token t) {
  return t == Token::First ? Token::Second : Token::First;
}

/// Which god holds which role, indexed by GodId.
using RoleAssignment = std::array<Role, 3>;

bool is_bijection(const RoleAssignment& roles);

/// One possible state of affairs: a role assignment plus the hidden lexicon
/// bit (whether the first-sorted word means "yes").
struct World {
  RoleAssignment roles{};
  bool yes_is_first = true;

  Role role_of(GodId g) const { return roles[static_cast<std::size_t>(g)]; }
  GodId holder_of(Role r) const;

  Token yes_token() const { return yes_is_first ? Token::First : Token::Second; }
  Token no_token() const { return other(yes_token()); }

  friend bool operator==(const World&, const World&) = default;
};

/// All 12 worlds, ordered by (order_index, yes_is_first) with false before true.
std::vector<World> enumerate_worlds();

/// God-order index 0..5: lexicographic over (role of A, role of B, role of C)
/// with TrueGod < FalseGod < RandomGod.
int order_index(const RoleAssignment& roles);
RoleAssignment order_from_index(int index);

/// Compact code such as "TFR" (roles of A, B, C in that order).
std::string order_code(const RoleAssignment& roles);

/// How Random behaves: BoolosCoin draws a truthful/lying persona per question;
/// TokenCoin emits a coin-chosen word and ignores the question entirely.
enum class RandomMode : std::uint8_t { BoolosCoin, TokenCoin };

/// What a god does when no consistent answer exists: say "no", or explode.
enum class ParadoxPolicy : std::uint8_t { AnswerNo, Explode };

struct RunConfig {
  RandomMode random_mode = RandomMode::BoolosCoin;
  ParadoxPolicy paradox_policy = ParadoxPolicy::AnswerNo;

  friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

enum class Coin : std::uint8_t { Heads = 0, Tails = 1 };

/// Token emitted by a TokenCoin Random: heads maps to the first-sorted word.
constexpr Token coin_token(Coin c) {
  return c == Coin::Heads ? Token::First : Token::Second;
}

/// A raw answer: one of the two words, or an explosion.
struct Answer {
  std::optional<Token> token;  // nullopt = explosion

  static Answer of(Token t) { return Answer{t}; }
  static Answer boom() { return Answer{std::nullopt}; }

  bool is_boom() const { return !token.has_value(); }
  Token tok() const;  // throws std::logic_error on an explosion

  friend bool operator==(const Answer&, const Answer&) = default;
};

/// What the interrogator can actually distinguish about one answer, given the
/// answers heard so far:
///   Opaque — a word, but no word has been heard before, so its rank is unknown
///   Same   — equal to the single word heard so far
///   First/Second — rank known, because two distinct words have now been heard
///   Boom   — an explosion (always recognizable as such)
enum class Label : std::uint8_t { Opaque = 0, Same = 1, First = 2, Second = 3, Boom = 4 };

using LabelSeq = std::vector<Label>;

/// Incremental observer state. Labels are assigned left to right using only
/// what has been heard up to each position; earlier labels are never revised.
class Canonicalizer {
 public:
  Label feed(const Answer& a);
  int distinct_tokens() const { return distinct_; }

 private:
  int distinct_ = 0;
  Token first_heard_ = Token::First;
};

std::vector<Label> canonicalize(std::span<const Answer> answers);

/// All label sequences reachable by some explosion-free token sequence of the
/// given length, sorted lexicographically by Label value. Sizes 1, 3, 7 for
/// depths 1, 2, 3.
std::vector<LabelSeq> observation_classes(int depth);

std::string_view to_string(GodId g);
std::string_view to_string(Role r);
std::string_view to_string(Token t);
std::string_view to_string(Label l);
std::string_view to_string(RandomMode m);
std::string_view to_string(ParadoxPolicy p);

std::optional<GodId> god_from_string(std::string_view s);
std::optional<Role> role_from_string(std::string_view s);
std::optional<Label> label_from_string(std::string_view s);

std::string label_seq_string(const LabelSeq& labels);  // space separated

}  // namespace gods
