#include "gods/strategy.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "gods/errors.hpp"

namespace gods {

namespace {

StrategyChild leaf(Role a, Role b, Role c) { return StrategyLeaf{{a, b, c}}; }

StrategyNodePtr node(GodId target, const char* builtin, std::map<Label, StrategyChild> branches) {
  StrategyNode n;
  n.target = target;
  n.question = builtin_question(builtin);
  n.branches = std::move(branches);
  return std::make_shared<const StrategyNode>(std::move(n));
}

bool child_equal(const StrategyChild& a, const StrategyChild& b);

bool node_equal(const StrategyNode& a, const StrategyNode& b) {
  if (a.target != b.target || !ast_equal(*a.question, *b.question)) return false;
  if (a.branches.size() != b.branches.size()) return false;
  auto it = b.branches.begin();
  for (const auto& [label, child] : a.branches) {
    if (it->first != label || !child_equal(child, it->second)) return false;
    ++it;
  }
  return true;
}

bool child_equal(const StrategyChild& a, const StrategyChild& b) {
  if (a.index() != b.index()) return false;
  if (std::holds_alternative<StrategyLeaf>(a)) {
    return std::get<StrategyLeaf>(a) == std::get<StrategyLeaf>(b);
  }
  return node_equal(*std::get<StrategyNodePtr>(a), *std::get<StrategyNodePtr>(b));
}

}  // namespace

bool strategy_equal(const StrategyTree& a, const StrategyTree& b) {
  return a.root && b.root && node_equal(*a.root, *b.root);
}

StrategyTree builtin_strategy(std::string_view name) {
  using enum Role;
  if (name == "puzzle1") {
    // After two questions Random is located; the third, put to a god known
    // not to be Random, repeats that god's previous word iff the god is True.
    auto q3_after_same = node(GodId::A, "p1.q3",
                              {{Label::Same, leaf(TrueGod, RandomGod, FalseGod)},
                               {Label::First, leaf(FalseGod, RandomGod, TrueGod)},
                               {Label::Second, leaf(FalseGod, RandomGod, TrueGod)}});
    auto q3_after_second = node(GodId::B, "p1.q3",
                                {{Label::Second, leaf(RandomGod, TrueGod, FalseGod)},
                                 {Label::First, leaf(RandomGod, FalseGod, TrueGod)}});
    auto q3_after_first = node(GodId::B, "p1.q3",
                               {{Label::First, leaf(FalseGod, TrueGod, RandomGod)},
                                {Label::Second, leaf(TrueGod, FalseGod, RandomGod)}});
    auto q2 = node(GodId::B, "p1.q2",
                   {{Label::Same, q3_after_same},
                    {Label::First, q3_after_first},
                    {Label::Second, q3_after_second}});
    return {node(GodId::A, "p1.q1", {{Label::Opaque, q2}})};
  }
  if (name == "puzzle3") {
    // Explosion at the first question pins B as Random; then C settles A vs C.
    // Otherwise B is safe to ask and one answer settles everything.
    auto after_boom = node(GodId::C, "p3.q2boom",
                           {{Label::Boom, leaf(FalseGod, RandomGod, TrueGod)},
                            {Label::Opaque, leaf(TrueGod, RandomGod, FalseGod)}});
    auto after_token = node(GodId::B, "p3.q2tok",
                            {{Label::Boom, leaf(RandomGod, TrueGod, FalseGod)},
                             {Label::Same, leaf(RandomGod, FalseGod, TrueGod)},
                             {Label::First, leaf(TrueGod, FalseGod, RandomGod)},
                             {Label::Second, leaf(FalseGod, TrueGod, RandomGod)}});
    return {node(GodId::A, "p3.q1", {{Label::Boom, after_boom}, {Label::Opaque, after_token}})};
  }
  throw UnknownNameError("unknown builtin strategy: " + std::string(name));
}

std::vector<std::string_view> builtin_strategy_names() { return {"puzzle1", "puzzle3"}; }

namespace {

// Token labels an answer can produce given how many distinct words the
// observer has heard along this path.
std::vector<Label> reachable_token_labels(int distinct) {
  if (distinct == 0) return {Label::Opaque};
  if (distinct == 1) return {Label::Same, Label::First, Label::Second};
  return {Label::First, Label::Second};
}

int distinct_after(int distinct, Label l) {
  switch (l) {
    case Label::Opaque: return 1;
    case Label::First:
    case Label::Second: return 2;
    default: return distinct;
  }
}

struct Validator {
  std::vector<ValidationIssue> issues;

  void note(const std::string& where, std::string message) {
    issues.push_back({where.empty() ? "(root)" : where, std::move(message)});
  }

  void walk(const StrategyNode& n, int depth, const std::string& where, int distinct,
            std::set<GodId> exploded) {
    if (depth > 3) {
      note(where, "depth > 3");
      return;
    }
    if (exploded.count(n.target) > 0) {
      note(where, "asks exploded god " + std::string(to_string(n.target)));
    }
    for (Label l : reachable_token_labels(distinct)) {
      if (n.branches.find(l) == n.branches.end()) {
        note(where, "missing branch for reachable label '" + std::string(to_string(l)) + "'");
      }
    }
    for (const auto& [label, child] : n.branches) {
      std::string child_where =
          (where.empty() ? "" : where + "/") + std::string(to_string(label));
      std::set<GodId> child_exploded = exploded;
      if (label == Label::Boom) child_exploded.insert(n.target);
      if (std::holds_alternative<StrategyLeaf>(child)) {
        const auto& guess = std::get<StrategyLeaf>(child).guess;
        if (!is_bijection(guess)) {
          note(child_where, "guess is not a bijection");
        }
      } else {
        walk(*std::get<StrategyNodePtr>(child), depth + 1, child_where,
             distinct_after(distinct, label), std::move(child_exploded));
      }
    }
  }
};

}  // namespace

ValidationReport validate_strategy(const StrategyTree& tree) {
  Validator v;
  if (!tree.root) {
    v.note("", "empty strategy");
  } else {
    v.walk(*tree.root, 1, "", 0, {});
  }
  return {std::move(v.issues)};
}

Coin CoinSource::next() {
  if (next_ >= coins_.size()) throw CoinExhaustedError("coin source exhausted");
  return coins_[next_++];
}

RunResult run_strategy(const StrategyTree& tree, const World& world, CoinSource& coins,
                       const RunConfig& config) {
  if (!tree.root) throw StrategyError("empty strategy");
  RunResult result;
  Canonicalizer observer;
  const StrategyNode* current = tree.root.get();
  for (;;) {
    std::optional<Coin> coin;
    if (world.role_of(current->target) == Role::RandomGod) {
      coin = coins.next();
      result.coins_used.push_back(*coin);
    }
    Answer a =
        answer_question(*current->question, world, current->target, coin, config, result.transcript);
    result.transcript.push_back({current->target, a});
    Label l = observer.feed(a);
    result.labels.push_back(l);
    auto it = current->branches.find(l);
    if (it == current->branches.end()) {
      throw StrategyError("no branch for label '" + std::string(to_string(l)) +
                          "' after prefix [" + label_seq_string(result.labels) + "]");
    }
    if (std::holds_alternative<StrategyLeaf>(it->second)) {
      result.guess = std::get<StrategyLeaf>(it->second).guess;
      return result;
    }
    current = std::get<StrategyNodePtr>(it->second).get();
  }
}

namespace {

struct FileLine {
  int indent = 0;
  std::string text;
  std::size_t number = 0;
};

[[noreturn]] void file_fail(std::size_t line, const std::string& message) {
  throw StrategyError("line " + std::to_string(line) + ": " + message);
}

std::vector<FileLine> split_lines(std::string_view text) {
  std::vector<FileLine> lines;
  std::size_t number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(start, end - start);
    ++number;
    start = end + 1;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    int indent = 0;
    std::size_t i = 0;
    for (; i < raw.size(); ++i) {
      if (raw[i] == ' ') {
        ++indent;
      } else if (raw[i] == '\t') {
        file_fail(number, "tabs are not allowed in indentation");
      } else {
        break;
      }
    }
    std::string_view body = raw.substr(i);
    while (!body.empty() && (body.back() == ' ' || body.back() == '\r')) body.remove_suffix(1);
    if (body.empty()) continue;
    lines.push_back({indent, std::string(body), number});
    if (end == text.size()) break;
  }
  return lines;
}

RoleAssignment parse_guess_spec(std::string_view spec, std::size_t line) {
  RoleAssignment roles{};
  std::array<bool, 3> seen{};
  std::size_t start = 0;
  std::string text(spec);
  text.erase(std::remove(text.begin(), text.end(), ' '), text.end());
  while (start < text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string::npos) end = text.size();
    std::string part = text.substr(start, end - start);
    start = end + 1;
    std::size_t eq = part.find('=');
    if (eq == std::string::npos) file_fail(line, "expected <god>=<role> in guess");
    auto god = god_from_string(part.substr(0, eq));
    auto role = role_from_string(part.substr(eq + 1));
    if (!god) file_fail(line, "unknown god '" + part.substr(0, eq) + "'");
    if (!role) file_fail(line, "unknown role '" + part.substr(eq + 1) + "'");
    std::size_t idx = static_cast<std::size_t>(*god);
    if (seen[idx]) file_fail(line, "god assigned twice in guess");
    seen[idx] = true;
    roles[idx] = *role;
  }
  if (!(seen[0] && seen[1] && seen[2])) file_fail(line, "guess must assign all of A, B, C");
  return roles;
}

QuestionPtr parse_question_ref(std::string_view text, std::size_t line) {
  constexpr std::string_view kBuiltinPrefix = "builtin:";
  if (text.substr(0, kBuiltinPrefix.size()) == kBuiltinPrefix) {
    try {
      return builtin_question(text.substr(kBuiltinPrefix.size()));
    } catch (const UnknownNameError& e) {
      file_fail(line, e.what());
    }
  }
  return parse_question(text);
}

struct FileParser {
  const std::vector<FileLine>& lines;
  std::size_t pos = 0;

  StrategyChild parse_child(int min_indent) {
    if (pos >= lines.size()) {
      file_fail(lines.back().number, "expected 'ask' or 'guess' after 'on'");
    }
    const FileLine& line = lines[pos];
    if (line.indent < min_indent) {
      file_fail(line.number, "expected a line indented under the previous 'on'");
    }
    if (line.text.rfind("guess ", 0) == 0) {
      ++pos;
      return StrategyLeaf{parse_guess_spec(std::string_view(line.text).substr(6), line.number)};
    }
    return parse_node();
  }

  StrategyNodePtr parse_node() {
    const FileLine& ask = lines[pos];
    if (ask.text.rfind("ask ", 0) != 0) file_fail(ask.number, "expected 'ask <god> <question>'");
    std::string_view rest = std::string_view(ask.text).substr(4);
    std::size_t space = rest.find(' ');
    if (space == std::string_view::npos) file_fail(ask.number, "expected a question after the god");
    auto god = god_from_string(rest.substr(0, space));
    if (!god) file_fail(ask.number, "unknown god '" + std::string(rest.substr(0, space)) + "'");
    StrategyNode n;
    n.target = *god;
    n.question = parse_question_ref(rest.substr(space + 1), ask.number);
    ++pos;

    int branch_indent = -1;
    while (pos < lines.size() && lines[pos].indent > ask.indent) {
      const FileLine& on = lines[pos];
      if (branch_indent < 0) {
        branch_indent = on.indent;
      } else if (on.indent != branch_indent) {
        if (on.indent < branch_indent) break;  // belongs to an outer level
        file_fail(on.number, "inconsistent indentation");
      }
      if (on.text.rfind("on ", 0) != 0 || on.text.back() != ':') {
        file_fail(on.number, "expected 'on <label>:'");
      }
      std::string label_name = on.text.substr(3, on.text.size() - 4);
      while (!label_name.empty() && label_name.back() == ' ') label_name.pop_back();
      auto label = label_from_string(label_name);
      if (!label) file_fail(on.number, "unknown label '" + label_name + "'");
      if (n.branches.count(*label) > 0) file_fail(on.number, "duplicate label '" + label_name + "'");
      ++pos;
      n.branches.emplace(*label, parse_child(branch_indent + 1));
    }
    if (n.branches.empty()) file_fail(ask.number, "'ask' has no 'on' branches");
    return std::make_shared<const StrategyNode>(std::move(n));
  }
};

void render_node(const StrategyNode& n, int depth, std::string& out) {
  std::string pad(static_cast<std::size_t>(depth) * 4, ' ');
  out += pad + "ask " + std::string(to_string(n.target)) + " " + render_question(*n.question) + "\n";
  for (const auto& [label, child] : n.branches) {
    out += pad + "  on " + std::string(to_string(label)) + ":\n";
    if (std::holds_alternative<StrategyLeaf>(child)) {
      const auto& guess = std::get<StrategyLeaf>(child).guess;
      out += pad + "    guess A=" + std::string(to_string(guess[0])) +
             ",B=" + std::string(to_string(guess[1])) + ",C=" + std::string(to_string(guess[2])) +
             "\n";
    } else {
      render_node(*std::get<StrategyNodePtr>(child), depth + 1, out);
    }
  }
}

}  // namespace

StrategyTree parse_strategy(std::string_view text) {
  std::vector<FileLine> lines = split_lines(text);
  if (lines.empty()) throw StrategyError("strategy file is empty");
  FileParser parser{lines};
  StrategyTree tree{parser.parse_node()};
  if (parser.pos != lines.size()) {
    file_fail(lines[parser.pos].number, "unexpected line after the strategy root");
  }
  return tree;
}

std::string render_strategy(const StrategyTree& tree) {
  if (!tree.root) throw StrategyError("empty strategy");
  std::string out;
  render_node(*tree.root, 0, out);
  return out;
}

}  // namespace gods
