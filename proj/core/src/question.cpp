#include "gods/question.hpp"

#include <algorithm>
#include <stdexcept>

#include "gods/errors.hpp"

namespace gods {

bool ast_equal(const Question& a, const Question& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case Question::Kind::IsRole:
      return a.god == b.god && a.role == b.role;
    case Question::Kind::SelfWould:
      return a.target == b.target;
    case Question::Kind::Would:
      if (!(a.target == b.target)) return false;
      break;
    default:
      break;
  }
  if (a.children.size() != b.children.size()) return false;
  for (std::size_t i = 0; i < a.children.size(); ++i) {
    if (!ast_equal(*a.children[i], *b.children[i])) return false;
  }
  return true;
}

bool contains_self_would(const Question& q) {
  if (q.kind == Question::Kind::SelfWould) return true;
  return std::any_of(q.children.begin(), q.children.end(),
                     [](const QuestionPtr& c) { return contains_self_would(*c); });
}

namespace ast {

namespace {
QuestionPtr make(Question q) { return std::make_shared<const Question>(std::move(q)); }
}  // namespace

QuestionPtr is(GodId g, Role r) {
  Question q;
  q.kind = Question::Kind::IsRole;
  q.god = g;
  q.role = r;
  return make(std::move(q));
}

QuestionPtr is_self(Role r) {
  Question q;
  q.kind = Question::Kind::IsRole;
  q.god = std::nullopt;
  q.role = r;
  return make(std::move(q));
}

QuestionPtr not_(QuestionPtr child) {
  Question q;
  q.kind = Question::Kind::Not;
  q.children = {std::move(child)};
  return make(std::move(q));
}

QuestionPtr and_(std::vector<QuestionPtr> children) {
  if (children.size() < 2) throw std::invalid_argument("and needs at least two operands");
  Question q;
  q.kind = Question::Kind::And;
  q.children = std::move(children);
  return make(std::move(q));
}

QuestionPtr or_(std::vector<QuestionPtr> children) {
  if (children.size() < 2) throw std::invalid_argument("or needs at least two operands");
  Question q;
  q.kind = Question::Kind::Or;
  q.children = std::move(children);
  return make(std::move(q));
}

QuestionPtr iff(QuestionPtr left, QuestionPtr right) {
  Question q;
  q.kind = Question::Kind::Iff;
  q.children = {std::move(left), std::move(right)};
  return make(std::move(q));
}

QuestionPtr would(TokenExpr target, QuestionPtr inner) {
  Question q;
  q.kind = Question::Kind::Would;
  q.target = target;
  q.children = {std::move(inner)};
  return make(std::move(q));
}

QuestionPtr self_would(TokenExpr target) {
  Question q;
  q.kind = Question::Kind::SelfWould;
  q.target = target;
  return make(std::move(q));
}

}  // namespace ast

Token resolve_token(const TokenExpr& expr, const Transcript& transcript) {
  switch (expr.kind) {
    case TokenExpr::Kind::RankFirst: return Token::First;
    case TokenExpr::Kind::RankSecond: return Token::Second;
    case TokenExpr::Kind::Prev:
    case TokenExpr::Kind::OppPrev: {
      if (expr.back < 1) throw EvalError("answer reference must look back at least one answer");
      if (static_cast<std::size_t>(expr.back) > transcript.size()) {
        throw EvalError("answer reference runs past the start of the transcript");
      }
      const Answer& a = transcript[transcript.size() - static_cast<std::size_t>(expr.back)].answer;
      if (a.is_boom()) throw EvalError("answer reference points at an explosion");
      Token t = a.tok();
      return expr.kind == TokenExpr::Kind::Prev ? t : other(t);
    }
  }
  throw EvalError("bad token expression");
}

namespace {

// The word the respondent would say to q, given persona and the self binding.
Token hypothetical_answer(const Question& q, const World& world, GodId respondent,
                          Persona persona, const Transcript& transcript, Token self_answer) {
  bool truth = eval_proposition(q, world, respondent, persona, transcript, self_answer);
  bool says_yes = (truth == (persona == Persona::Truthful));
  return says_yes ? world.yes_token() : world.no_token();
}

}  // namespace

bool eval_proposition(const Question& q, const World& world, GodId respondent,
                      Persona persona, const Transcript& transcript, Token self_answer) {
  switch (q.kind) {
    case Question::Kind::IsRole: {
      GodId g = q.god.value_or(respondent);
      return world.role_of(g) == q.role;
    }
    case Question::Kind::Not:
      return !eval_proposition(*q.children[0], world, respondent, persona, transcript, self_answer);
    case Question::Kind::And:
      return std::all_of(q.children.begin(), q.children.end(), [&](const QuestionPtr& c) {
        return eval_proposition(*c, world, respondent, persona, transcript, self_answer);
      });
    case Question::Kind::Or:
      return std::any_of(q.children.begin(), q.children.end(), [&](const QuestionPtr& c) {
        return eval_proposition(*c, world, respondent, persona, transcript, self_answer);
      });
    case Question::Kind::Iff:
      return eval_proposition(*q.children[0], world, respondent, persona, transcript, self_answer) ==
             eval_proposition(*q.children[1], world, respondent, persona, transcript, self_answer);
    case Question::Kind::Would:
      return hypothetical_answer(*q.children[0], world, respondent, persona, transcript,
                                 self_answer) == resolve_token(q.target, transcript);
    case Question::Kind::SelfWould:
      return resolve_token(q.target, transcript) == self_answer;
  }
  throw EvalError("bad question node");
}

Answer answer_with_persona(const Question& q, const World& world, GodId respondent,
                           Persona persona, ParadoxPolicy policy, const Transcript& transcript) {
  std::optional<Token> consistent;
  int n_consistent = 0;
  for (Token candidate : {Token::First, Token::Second}) {
    Token said = hypothetical_answer(q, world, respondent, persona, transcript, candidate);
    if (said == candidate) {
      consistent = candidate;
      ++n_consistent;
    }
  }
  if (n_consistent == 1) return Answer::of(*consistent);
  // No self-consistent answer, or both are: the god can't answer.
  if (policy == ParadoxPolicy::AnswerNo) return Answer::of(world.no_token());
  return Answer::boom();
}

Answer answer_question(const Question& q, const World& world, GodId respondent,
                       std::optional<Coin> coin, const RunConfig& config,
                       const Transcript& transcript) {
  bool is_random = world.role_of(respondent) == Role::RandomGod;
  if (is_random && !coin.has_value()) {
    throw std::invalid_argument("a coin is required when the respondent is Random");
  }
  if (!is_random && coin.has_value()) {
    throw std::invalid_argument("a coin was supplied for a non-Random respondent");
  }
  if (is_random && config.random_mode == RandomMode::TokenCoin) {
    // The question is never even processed, so this god can't explode.
    return Answer::of(coin_token(*coin));
  }
  Persona persona;
  if (is_random) {
    persona = *coin == Coin::Heads ? Persona::Truthful : Persona::Lying;
  } else {
    persona = world.role_of(respondent) == Role::TrueGod ? Persona::Truthful : Persona::Lying;
  }
  return answer_with_persona(q, world, respondent, persona, config.paradox_policy, transcript);
}

QuestionPtr builtin_question(std::string_view name) {
  using ast::and_;
  using ast::is;
  using ast::is_self;
  using ast::not_;
  using ast::or_;
  using ast::self_would;
  using ast::would;

  if (name == "p1.q1") return would(tok::first(), is_self(Role::RandomGod));
  if (name == "p1.q2") return would(tok::prev(1), is_self(Role::RandomGod));
  if (name == "p1.q3") return would(tok::prev(1), is_self(Role::TrueGod));
  if (name == "p3.q1") {
    return would(tok::first(),
                 or_({and_({not_(is(GodId::B, Role::RandomGod)), is_self(Role::FalseGod)}),
                      and_({is(GodId::B, Role::RandomGod), self_would(tok::second())})}));
  }
  if (name == "p3.q2boom") {
    return would(tok::first(), and_({is_self(Role::TrueGod), self_would(tok::second())}));
  }
  if (name == "p3.q2tok") {
    return would(tok::prev(1),
                 or_({and_({is(GodId::A, Role::RandomGod), is_self(Role::TrueGod),
                            self_would(tok::opp_prev(1))}),
                      and_({is(GodId::A, Role::RandomGod), is_self(Role::FalseGod)})}));
  }
  throw UnknownNameError("unknown builtin question: " + std::string(name));
}

std::vector<std::string_view> builtin_question_names() {
  return {"p1.q1", "p1.q2", "p1.q3", "p3.q1", "p3.q2boom", "p3.q2tok"};
}

}  // namespace gods
