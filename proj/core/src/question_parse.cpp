#include <cctype>
#include <string>

#include "gods/errors.hpp"
#include "gods/question.hpp"

namespace gods {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  QuestionPtr parse() {
    QuestionPtr q = parse_expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return q;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, pos_); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    return text_[pos_];
  }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::string_view ident() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
        ++pos_;
      } else {
        break;
      }
    }
    if (pos_ == start) fail("expected a name");
    return text_.substr(start, pos_ - start);
  }

  int integer() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start) fail("expected a number");
    int value = 0;
    for (std::size_t i = start; i < pos_; ++i) {
      value = value * 10 + (text_[i] - '0');
      if (value > 1000000) fail("number too large");
    }
    return value;
  }

  std::optional<GodId> parse_god() {
    std::size_t at = pos_;
    std::string_view name = ident();
    if (name == "self") return std::nullopt;
    if (auto g = god_from_string(name)) return g;
    throw ParseError("unknown god '" + std::string(name) + "'", at);
  }

  Role parse_role() {
    std::size_t at = pos_;
    std::string_view name = ident();
    if (auto r = role_from_string(name)) return *r;
    throw ParseError("unknown role '" + std::string(name) + "'", at);
  }

  TokenExpr parse_token_expr() {
    std::size_t at = pos_;
    std::string_view name = ident();
    if (name == "first") return tok::first();
    if (name == "second") return tok::second();
    if (name == "prev" || name == "opp_prev") {
      expect('(');
      int k = integer();
      if (k < 1) throw ParseError("answer reference must be at least 1", at);
      expect(')');
      return name == "prev" ? tok::prev(k) : tok::opp_prev(k);
    }
    throw ParseError("unknown token name '" + std::string(name) + "'", at);
  }

  std::vector<QuestionPtr> parse_args(std::size_t min_arity) {
    expect('(');
    std::vector<QuestionPtr> args;
    args.push_back(parse_expr());
    while (peek() == ',') {
      ++pos_;
      args.push_back(parse_expr());
    }
    expect(')');
    if (args.size() < min_arity) fail("too few operands");
    return args;
  }

  QuestionPtr parse_expr() {
    std::size_t at = pos_;
    std::string_view head = ident();
    if (head == "is") {
      expect('(');
      std::optional<GodId> g = parse_god();
      expect(',');
      Role r = parse_role();
      expect(')');
      return g ? ast::is(*g, r) : ast::is_self(r);
    }
    if (head == "not") {
      expect('(');
      QuestionPtr child = parse_expr();
      expect(')');
      return ast::not_(child);
    }
    if (head == "and" || head == "or") {
      std::vector<QuestionPtr> args = parse_args(2);
      return head == "and" ? ast::and_(std::move(args)) : ast::or_(std::move(args));
    }
    if (head == "iff") {
      expect('(');
      QuestionPtr left = parse_expr();
      expect(',');
      QuestionPtr right = parse_expr();
      expect(')');
      return ast::iff(left, right);
    }
    if (head == "would") {
      expect('(');
      TokenExpr target = parse_token_expr();
      expect(',');
      QuestionPtr inner = parse_expr();
      expect(')');
      return ast::would(target, inner);
    }
    if (head == "self_would") {
      expect('(');
      TokenExpr target = parse_token_expr();
      expect(')');
      return ast::self_would(target);
    }
    throw ParseError("unknown operator '" + std::string(head) + "'", at);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::string render_token_expr(const TokenExpr& t) {
  switch (t.kind) {
    case TokenExpr::Kind::RankFirst: return "first";
    case TokenExpr::Kind::RankSecond: return "second";
    case TokenExpr::Kind::Prev: return "prev(" + std::to_string(t.back) + ")";
    case TokenExpr::Kind::OppPrev: return "opp_prev(" + std::to_string(t.back) + ")";
  }
  return "?";
}

}  // namespace

QuestionPtr parse_question(std::string_view text) { return Parser(text).parse(); }

std::string render_question(const Question& q) {
  switch (q.kind) {
    case Question::Kind::IsRole: {
      std::string g = q.god ? std::string(to_string(*q.god)) : "self";
      return "is(" + g + "," + std::string(to_string(q.role)) + ")";
    }
    case Question::Kind::Not:
      return "not(" + render_question(*q.children[0]) + ")";
    case Question::Kind::And:
    case Question::Kind::Or: {
      std::string out = q.kind == Question::Kind::And ? "and(" : "or(";
      for (std::size_t i = 0; i < q.children.size(); ++i) {
        if (i > 0) out += ',';
        out += render_question(*q.children[i]);
      }
      return out + ")";
    }
    case Question::Kind::Iff:
      return "iff(" + render_question(*q.children[0]) + "," + render_question(*q.children[1]) + ")";
    case Question::Kind::Would:
      return "would(" + render_token_expr(q.target) + "," + render_question(*q.children[0]) + ")";
    case Question::Kind::SelfWould:
      return "self_would(" + render_token_expr(q.target) + ")";
  }
  return "?";
}

}  // namespace gods
