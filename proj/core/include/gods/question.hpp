#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gods/world.hpp"

namespace gods {

/// A way of naming one of the two answer words inside a question: by sort
/// rank, or by reference to an answer already on the record.
struct TokenExpr {
  enum class Kind : std::uint8_t { RankFirst, RankSecond, Prev, OppPrev };
  Kind kind = Kind::RankFirst;
  int back = 0;  // for Prev/OppPrev: how many answers back, >= 1

  friend bool operator==(const TokenExpr&, const TokenExpr&) = default;
};

namespace tok {
constexpr TokenExpr first() { return {TokenExpr::Kind::RankFirst, 0}; }
constexpr TokenExpr second() { return {TokenExpr::Kind::RankSecond, 0}; }
constexpr TokenExpr prev(int k) { return {TokenExpr::Kind::Prev, k}; }
constexpr TokenExpr opp_prev(int k) { return {TokenExpr::Kind::OppPrev, k}; }
}  // namespace tok

struct Question;
using QuestionPtr = std::shared_ptr<const Question>;

/// Proposition tree. Would(t, q) reads "would you, in your current mental
/// state, answer q with the word t". SelfWould(t) reads "you answer the
/// question being asked right now with the word t" and refers to the
/// outermost question only.
struct Question {
  enum class Kind : std::uint8_t { IsRole, Not, And, Or, Iff, Would, SelfWould };

  Kind kind = Kind::IsRole;
  std::optional<GodId> god;           // IsRole; nullopt means "self"
  Role role = Role::TrueGod;          // IsRole
  TokenExpr target;                   // Would / SelfWould
  std::vector<QuestionPtr> children;  // Not: 1, And/Or: >= 2, Iff: 2, Would: 1
};

bool ast_equal(const Question& a, const Question& b);
inline bool ast_equal(const QuestionPtr& a, const QuestionPtr& b) {
  return a && b && ast_equal(*a, *b);
}
bool contains_self_would(const Question& q);

namespace ast {
QuestionPtr is(GodId g, Role r);
QuestionPtr is_self(Role r);
QuestionPtr not_(QuestionPtr child);
QuestionPtr and_(std::vector<QuestionPtr> children);
QuestionPtr or_(std::vector<QuestionPtr> children);
QuestionPtr iff(QuestionPtr left, QuestionPtr right);
QuestionPtr would(TokenExpr target, QuestionPtr inner);
QuestionPtr self_would(TokenExpr target);
}  // namespace ast

struct TranscriptEntry {
  GodId target;
  Answer answer;

  friend bool operator==(const TranscriptEntry&, const TranscriptEntry&) = default;
};

/// Ordered record of (who was asked, what they answered), raw tokens only.
using Transcript = std::vector<TranscriptEntry>;

enum class Persona : std::uint8_t { Truthful, Lying };

/// Parses the question DSL:
///   expr  := is(god,role) | not(expr) | and(expr,expr...) | or(expr,expr...)
///          | iff(expr,expr) | would(token,expr) | self_would(token)
///   god   := A | B | C | self      role := true | false | random
///   token := first | second | prev(k) | opp_prev(k)
/// Whitespace between tokens is insignificant. Throws ParseError.
QuestionPtr parse_question(std::string_view text);

/// Canonical text form; parse_question(render_question(q)) reproduces q.
std::string render_question(const Question& q);

/// Resolves a token expression against the transcript. Throws EvalError when
/// the reference runs past the transcript or points at an explosion.
Token resolve_token(const TokenExpr& expr, const Transcript& transcript);

/// Truth value of a question for a respondent with a pinned persona.
/// self_answer binds SelfWould; "current mental state" means the one persona
/// is shared by every nested counterfactual.
bool eval_proposition(const Question& q, const World& world, GodId respondent,
                      Persona persona, const Transcript& transcript, Token self_answer);

/// Fixed-point answer of a persona-bound respondent. A candidate answer a is
/// consistent when the respondent, assuming it will answer a, would indeed
/// answer a. Exactly one consistent candidate: that is the answer. Zero or
/// two: the god cannot answer, and the paradox policy decides what happens.
Answer answer_with_persona(const Question& q, const World& world, GodId respondent,
                           Persona persona, ParadoxPolicy policy, const Transcript& transcript);

/// Full answer semantics. coin must be present exactly when the respondent
/// holds RandomGod: under TokenCoin it picks the emitted word (heads = first
/// sorted); under BoolosCoin it picks the persona (heads = truthful).
Answer answer_question(const Question& q, const World& world, GodId respondent,
                       std::optional<Coin> coin, const RunConfig& config,
                       const Transcript& transcript);

/// Named questions used by the bundled strategies:
///   p1.q1, p1.q2, p1.q3          — the three-question interrogation
///   p3.q1, p3.q2boom, p3.q2tok   — the two-question interrogation
/// Throws UnknownNameError otherwise.
QuestionPtr builtin_question(std::string_view name);
std::vector<std::string_view> builtin_question_names();

}  // namespace gods
