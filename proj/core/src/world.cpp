#include "gods/world.hpp"

#include <set>
#include <stdexcept>

namespace gods {

namespace {

// Lexicographic over (role of A, role of B, role of C), True < False < Random.
constexpr std::array<RoleAssignment, 6> kOrders{{
    {Role::TrueGod, Role::FalseGod, Role::RandomGod},
    {Role::TrueGod, Role::RandomGod, Role::FalseGod},
    {Role::FalseGod, Role::TrueGod, Role::RandomGod},
    {Role::FalseGod, Role::RandomGod, Role::TrueGod},
    {Role::RandomGod, Role::TrueGod, Role::FalseGod},
    {Role::RandomGod, Role::FalseGod, Role::TrueGod},
}};

}  // namespace

bool is_bijection(const RoleAssignment& roles) {
  bool seen[3] = {false, false, false};
  for (Role r : roles) seen[static_cast<std::size_t>(r)] = true;
  return seen[0] && seen[1] && seen[2];
}

GodId World::holder_of(Role r) const {
  for (GodId g : kAllGods) {
    if (role_of(g) == r) return g;
  }
  throw std::logic_error("role held by no god; assignment is not a bijection");
}

Token Answer::tok() const {
  if (!token.has_value()) throw std::logic_error("an explosion carries no token");
  return *token;
}

std::vector<World> enumerate_worlds() {
  std::vector<World> out;
  out.reserve(12);
  for (const RoleAssignment& roles : kOrders) {
    for (bool yif : {false, true}) {
      out.push_back(World{roles, yif});
    }
  }
  return out;
}

int order_index(const RoleAssignment& roles) {
  for (int i = 0; i < 6; ++i) {
    if (kOrders[static_cast<std::size_t>(i)] == roles) return i;
  }
  throw std::invalid_argument("role assignment is not a bijection");
}

RoleAssignment order_from_index(int index) {
  if (index < 0 || index >= 6) throw std::invalid_argument("order index out of range");
  return kOrders[static_cast<std::size_t>(index)];
}

std::string order_code(const RoleAssignment& roles) {
  std::string code;
  for (Role r : roles) {
    switch (r) {
      case Role::TrueGod: code += 'T'; break;
      case Role::FalseGod: code += 'F'; break;
      case Role::RandomGod: code += 'R'; break;
    }
  }
  return code;
}

Label Canonicalizer::feed(const Answer& a) {
  if (a.is_boom()) return Label::Boom;
  Token t = a.tok();
  if (distinct_ == 0) {
    distinct_ = 1;
    first_heard_ = t;
    return Label::Opaque;
  }
  if (distinct_ == 1) {
    if (t == first_heard_) return Label::Same;
    distinct_ = 2;  // both words now heard; ranks known from here on
  }
  return t == Token::First ? Label::First : Label::Second;
}

std::vector<Label> canonicalize(std::span<const Answer> answers) {
  Canonicalizer state;
  std::vector<Label> out;
  out.reserve(answers.size());
  for (const Answer& a : answers) out.push_back(state.feed(a));
  return out;
}

std::vector<LabelSeq> observation_classes(int depth) {
  if (depth < 1) throw std::invalid_argument("depth must be at least 1");
  if (depth > 20) throw std::invalid_argument("depth too large");
  std::set<LabelSeq> classes;
  for (std::uint32_t bits = 0; bits < (1u << depth); ++bits) {
    std::vector<Answer> raw;
    raw.reserve(static_cast<std::size_t>(depth));
    for (int i = 0; i < depth; ++i) {
      raw.push_back(Answer::of((bits >> i) & 1u ? Token::Second : Token::First));
    }
    classes.insert(canonicalize(raw));
  }
  return {classes.begin(), classes.end()};
}

std::string_view to_string(GodId g) {
  switch (g) {
    case GodId::A: return "A";
    case GodId::B: return "B";
    case GodId::C: return "C";
  }
  return "?";
}

std::string_view to_string(Role r) {
  switch (r) {
    case Role::TrueGod: return "true";
    case Role::FalseGod: return "false";
    case Role::RandomGod: return "random";
  }
  return "?";
}

std::string_view to_string(Token t) {
  return t == Token::First ? "first" : "second";
}

std::string_view to_string(Label l) {
  switch (l) {
    case Label::Opaque: return "opaque";
    case Label::Same: return "same";
    case Label::First: return "first";
    case Label::Second: return "second";
    case Label::Boom: return "boom";
  }
  return "?";
}

std::string_view to_string(RandomMode m) {
  return m == RandomMode::BoolosCoin ? "boolos" : "coin";
}

std::string_view to_string(ParadoxPolicy p) {
  return p == ParadoxPolicy::AnswerNo ? "answer-no" : "explode";
}

std::optional<GodId> god_from_string(std::string_view s) {
  if (s == "A") return GodId::A;
  if (s == "B") return GodId::B;
  if (s == "C") return GodId::C;
  return std::nullopt;
}

std::optional<Role> role_from_string(std::string_view s) {
  if (s == "true") return Role::TrueGod;
  if (s == "false") return Role::FalseGod;
  if (s == "random") return Role::RandomGod;
  return std::nullopt;
}

std::optional<Label> label_from_string(std::string_view s) {
  if (s == "opaque") return Label::Opaque;
  if (s == "same") return Label::Same;
  if (s == "first") return Label::First;
  if (s == "second") return Label::Second;
  if (s == "boom") return Label::Boom;
  return std::nullopt;
}

std::string label_seq_string(const LabelSeq& labels) {
  std::string out;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i > 0) out += ' ';
    out += to_string(labels[i]);
  }
  return out;
}

}  // namespace gods
