#include "gods/impossibility.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <span>
#include <stdexcept>

namespace gods {

std::string_view to_string(Channel ch) {
  return ch == Channel::SortRank ? "sort_rank" : "absolute_token";
}

namespace {

LabelSeq channel_labels(Channel ch, std::span<const Token> raw) {
  LabelSeq out;
  out.reserve(raw.size());
  if (ch == Channel::SortRank) {
    Canonicalizer c;
    for (Token t : raw) out.push_back(c.feed(Answer::of(t)));
  } else {
    for (Token t : raw) out.push_back(t == Token::First ? Label::First : Label::Second);
  }
  return out;
}

std::vector<LabelSeq> channel_prefixes(Channel ch, int len) {
  std::set<LabelSeq> seqs;
  for (std::uint32_t bits = 0; bits < (1u << len); ++bits) {
    std::vector<Token> raw;
    for (int i = 0; i < len; ++i) {
      raw.push_back((bits >> i) & 1u ? Token::Second : Token::First);
    }
    seqs.insert(channel_labels(ch, raw));
  }
  return {seqs.begin(), seqs.end()};
}

// One complete free-answer assignment for one (order, coin tape) scenario:
// the classes its runs land in, plus the script that realizes them.
struct CaseAlternative {
  std::uint32_t mask = 0;
  std::vector<Token> coins;  // tape prefix actually consumed
  std::vector<AnswerChoice> choices;
};

struct SearchContext {
  Channel channel;
  std::vector<LabelSeq> classes;  // depth-3 classes, sorted
  std::vector<LabelSeq> p1;       // depth-1 prefixes
  std::vector<LabelSeq> p2;       // depth-2 prefixes
  std::map<LabelSeq, int> class_index;
  std::map<LabelSeq, int> p1_index;
  std::map<LabelSeq, int> p2_index;

  static SearchContext build(Channel ch) {
    SearchContext ctx;
    ctx.channel = ch;
    ctx.classes = channel_prefixes(ch, 3);
    ctx.p1 = channel_prefixes(ch, 1);
    ctx.p2 = channel_prefixes(ch, 2);
    for (std::size_t i = 0; i < ctx.classes.size(); ++i) ctx.class_index[ctx.classes[i]] = int(i);
    for (std::size_t i = 0; i < ctx.p1.size(); ++i) ctx.p1_index[ctx.p1[i]] = int(i);
    for (std::size_t i = 0; i < ctx.p2.size(); ++i) ctx.p2_index[ctx.p2[i]] = int(i);
    return ctx;
  }
};

struct TargetMap {
  std::vector<GodId> q2;  // indexed by depth-1 prefix
  std::vector<GodId> q3;  // indexed by depth-2 prefix
};

// Enumerates every complete answer assignment for one scenario. Non-Random
// respondents branch as alternatives (the strategy picks one); Random's coin
// at the first two questions comes off the tape; a third question to Random
// forks the run and both forks land in the signature.
std::vector<CaseAlternative> enumerate_scenario(const SearchContext& ctx, const TargetMap& map,
                                                const RoleAssignment& roles,
                                                const std::array<Token, 2>& tape, int pos,
                                                std::vector<Token>& raw, int consumed) {
  if (pos == 3) {
    CaseAlternative alt;
    alt.mask = 1u << ctx.class_index.at(channel_labels(ctx.channel, raw));
    return {alt};
  }
  GodId target = GodId::A;
  if (pos == 1) {
    target = map.q2[static_cast<std::size_t>(
        ctx.p1_index.at(channel_labels(ctx.channel, std::span(raw).first(1))))];
  } else if (pos == 2) {
    target = map.q3[static_cast<std::size_t>(
        ctx.p2_index.at(channel_labels(ctx.channel, std::span(raw).first(2))))];
  }
  if (roles[static_cast<std::size_t>(target)] == Role::RandomGod) {
    if (pos < 2) {
      Token coin = tape[static_cast<std::size_t>(consumed)];
      raw.push_back(coin);
      auto alts = enumerate_scenario(ctx, map, roles, tape, pos + 1, raw, consumed + 1);
      raw.pop_back();
      for (CaseAlternative& a : alts) a.coins.insert(a.coins.begin(), coin);
      return alts;
    }
    // Third question to Random: both coin values must decode to this order.
    raw.push_back(Token::First);
    auto heads = enumerate_scenario(ctx, map, roles, tape, pos + 1, raw, consumed);
    raw.pop_back();
    raw.push_back(Token::Second);
    auto tails = enumerate_scenario(ctx, map, roles, tape, pos + 1, raw, consumed);
    raw.pop_back();
    std::vector<CaseAlternative> out;
    for (const CaseAlternative& h : heads) {
      for (const CaseAlternative& t : tails) {
        CaseAlternative merged;
        merged.mask = h.mask | t.mask;
        merged.coins = h.coins;
        merged.coins.insert(merged.coins.end(), t.coins.begin(), t.coins.end());
        merged.choices = h.choices;
        merged.choices.insert(merged.choices.end(), t.choices.begin(), t.choices.end());
        out.push_back(std::move(merged));
      }
    }
    return out;
  }
  std::vector<CaseAlternative> out;
  for (Token t : {Token::First, Token::Second}) {
    AnswerChoice choice{pos, raw, t};
    raw.push_back(t);
    auto alts = enumerate_scenario(ctx, map, roles, tape, pos + 1, raw, consumed);
    raw.pop_back();
    for (CaseAlternative& a : alts) {
      a.choices.insert(a.choices.begin(), choice);
      out.push_back(std::move(a));
    }
  }
  return out;
}

// One order's possible class signatures under a target map: per coin tape,
// pick one answer assignment; the signature is the union over tapes.
struct OrderAlternative {
  std::uint32_t mask = 0;
  std::vector<CaseScript> scripts;
};

std::vector<OrderAlternative> order_alternatives(const SearchContext& ctx, const TargetMap& map,
                                                 int order, SearchStats& stats) {
  const RoleAssignment roles = order_from_index(order);
  std::vector<OrderAlternative> acc{OrderAlternative{}};
  for (Token t0 : {Token::First, Token::Second}) {
    for (Token t1 : {Token::First, Token::Second}) {
      std::array<Token, 2> tape{t0, t1};
      std::vector<Token> raw;
      auto case_alts = enumerate_scenario(ctx, map, roles, tape, 0, raw, 0);
      stats.answer_functions += case_alts.size();
      std::vector<OrderAlternative> next;
      std::set<std::uint32_t> seen;
      for (const OrderAlternative& oa : acc) {
        for (const CaseAlternative& ca : case_alts) {
          std::uint32_t mask = oa.mask | ca.mask;
          if (!seen.insert(mask).second) continue;
          OrderAlternative merged;
          merged.mask = mask;
          merged.scripts = oa.scripts;
          merged.scripts.push_back(CaseScript{order, ca.coins, ca.choices});
          next.push_back(std::move(merged));
        }
      }
      acc = std::move(next);
    }
  }
  return acc;
}

// Layered allocation: can each order be given a signature so that no class is
// claimed by two orders? Deterministic, memoized on the set of used classes.
struct Allocation {
  bool feasible = false;
  std::array<int, 6> picks{};  // alternative index per order
};

Allocation allocate_disjoint(const std::array<std::vector<OrderAlternative>, 6>& alts,
                             SearchStats& stats) {
  // layer[i]: used-class masks reachable after assigning orders 0..i-1,
  // with the (previous mask, alternative index) that got there.
  std::array<std::map<std::uint32_t, std::pair<std::uint32_t, int>>, 7> layer;
  layer[0][0] = {0, -1};
  for (int i = 0; i < 6; ++i) {
    for (const auto& [used, from] : layer[i]) {
      for (std::size_t j = 0; j < alts[static_cast<std::size_t>(i)].size(); ++j) {
        ++stats.allocation_nodes;
        std::uint32_t mask = alts[static_cast<std::size_t>(i)][j].mask;
        if ((used & mask) != 0) {
          ++stats.prunes;
          continue;
        }
        layer[i + 1].try_emplace(used | mask, std::make_pair(used, int(j)));
      }
    }
  }
  Allocation result;
  if (layer[6].empty()) return result;
  result.feasible = true;
  std::uint32_t at = layer[6].begin()->first;
  for (int i = 6; i > 0; --i) {
    auto [prev, pick] = layer[static_cast<std::size_t>(i)].at(at);
    result.picks[static_cast<std::size_t>(i - 1)] = pick;
    at = prev;
  }
  return result;
}

AdaptiveWitness build_witness(const SearchContext& ctx, const TargetMap& map,
                              const std::array<std::vector<OrderAlternative>, 6>& alts,
                              const Allocation& alloc) {
  AdaptiveWitness w;
  w.q1_target = GodId::A;
  for (std::size_t i = 0; i < ctx.p1.size(); ++i) w.q2_targets[ctx.p1[i]] = map.q2[i];
  for (std::size_t i = 0; i < ctx.p2.size(); ++i) w.q3_targets[ctx.p2[i]] = map.q3[i];
  for (int order = 0; order < 6; ++order) {
    const OrderAlternative& chosen =
        alts[static_cast<std::size_t>(order)][static_cast<std::size_t>(
            alloc.picks[static_cast<std::size_t>(order)])];
    for (const CaseScript& s : chosen.scripts) w.scripts.push_back(s);
    for (std::size_t c = 0; c < ctx.classes.size(); ++c) {
      if (chosen.mask & (1u << c)) w.class_to_order[ctx.classes[c]] = order;
    }
  }
  return w;
}

}  // namespace

std::vector<CoinCase> enumerate_cases(GodId q1_target, GodId q2_target) {
  std::vector<CoinCase> out;
  for (int order = 0; order < 6; ++order) {
    const RoleAssignment roles = order_from_index(order);
    bool random_at_1 = roles[static_cast<std::size_t>(q1_target)] == Role::RandomGod;
    bool random_at_2 = roles[static_cast<std::size_t>(q2_target)] == Role::RandomGod;
    std::vector<std::array<std::optional<Token>, 2>> combos;
    if (random_at_1 && random_at_2) {
      for (Token t0 : {Token::First, Token::Second}) {
        for (Token t1 : {Token::First, Token::Second}) combos.push_back({t0, t1});
      }
    } else if (random_at_1) {
      for (Token t0 : {Token::First, Token::Second}) combos.push_back({t0, std::nullopt});
    } else if (random_at_2) {
      for (Token t1 : {Token::First, Token::Second}) combos.push_back({std::nullopt, t1});
    } else {
      combos.push_back({std::nullopt, std::nullopt});
    }
    for (const auto& forced : combos) out.push_back(CoinCase{order, forced});
  }
  return out;
}

bool class_swap_symmetric(const LabelSeq& labels) {
  int n = static_cast<int>(labels.size());
  if (n == 0 || n > 20) throw std::invalid_argument("bad class length");
  for (std::uint32_t bits = 0; bits < (1u << n); ++bits) {
    std::vector<Answer> raw, swapped;
    for (int i = 0; i < n; ++i) {
      Token t = (bits >> i) & 1u ? Token::Second : Token::First;
      raw.push_back(Answer::of(t));
      swapped.push_back(Answer::of(other(t)));
    }
    if (canonicalize(raw) == labels && canonicalize(swapped) == labels) return true;
  }
  return false;
}

FeasibilityResult search_adaptive_solution(Channel channel, SearchOptions options) {
  const SearchContext ctx = SearchContext::build(channel);
  FeasibilityResult result;
  result.channel = channel;

  const std::array<GodId, 3> gods = kAllGods;
  std::uint64_t q2_combos = 1;
  if (!options.q2_target) {
    for (std::size_t i = 0; i < ctx.p1.size(); ++i) q2_combos *= 3;
  }
  std::uint64_t q3_combos = 1;
  for (std::size_t i = 0; i < ctx.p2.size(); ++i) q3_combos *= 3;

  for (std::uint64_t m2 = 0; m2 < q2_combos; ++m2) {
    TargetMap map;
    map.q2.resize(ctx.p1.size());
    std::uint64_t d2 = m2;
    for (std::size_t i = 0; i < ctx.p1.size(); ++i) {
      map.q2[i] = options.q2_target ? *options.q2_target : gods[d2 % 3];
      d2 /= 3;
    }
    for (std::uint64_t m3 = 0; m3 < q3_combos; ++m3) {
      map.q3.resize(ctx.p2.size());
      std::uint64_t d3 = m3;
      for (std::size_t i = 0; i < ctx.p2.size(); ++i) {
        map.q3[i] = gods[d3 % 3];
        d3 /= 3;
      }
      ++result.stats.target_maps;
      std::array<std::vector<OrderAlternative>, 6> alts;
      for (int order = 0; order < 6; ++order) {
        alts[static_cast<std::size_t>(order)] =
            order_alternatives(ctx, map, order, result.stats);
      }
      Allocation alloc = allocate_disjoint(alts, result.stats);
      if (alloc.feasible) {
        result.solvable = true;
        result.witness = build_witness(ctx, map, alts, alloc);
        return result;
      }
    }
  }
  result.solvable = false;
  return result;
}

PigeonholeSummary pigeonhole_summary(GodId q1_target, GodId q2_target) {
  if (q1_target == q2_target) {
    throw std::invalid_argument("pigeonhole summary needs distinct targets");
  }
  PigeonholeSummary s;
  s.q1_target = q1_target;
  s.q2_target = q2_target;
  const auto cases = enumerate_cases(q1_target, q2_target);
  s.cases = static_cast<int>(cases.size());
  const auto classes = observation_classes(3);
  s.classes = static_cast<int>(classes.size());
  std::array<int, 6> per_order{};
  for (const CoinCase& c : cases) ++per_order[static_cast<std::size_t>(c.order)];
  for (int n : per_order) {
    if (n == 1) ++s.unsplit_orders;
    if (n == 2) ++s.split_orders;
  }
  for (const LabelSeq& c : classes) {
    if (class_swap_symmetric(c)) {
      ++s.symmetric_classes;
      if (s.shared_class.empty()) s.shared_class = c;
    }
  }
  // A split order needs two classes — its two cases answer differently by
  // construction — unless it is the one order folded into a symmetric class.
  s.demand = s.unsplit_orders + 2 * s.split_orders - std::min(s.split_orders, s.symmetric_classes);
  s.feasible = s.demand <= s.classes;
  return s;
}

SameTargetDeficit same_target_deficit(GodId target) {
  SameTargetDeficit d;
  d.target = target;
  const auto classes = observation_classes(3);
  const auto prefixes = observation_classes(2);
  int random_orders = 0;
  for (int order = 0; order < 6; ++order) {
    if (order_from_index(order)[static_cast<std::size_t>(target)] == Role::RandomGod) {
      ++random_orders;
    }
  }
  d.needed = 6 - random_orders;
  // With both questions to this god, a Random holder's two coin tokens realize
  // every raw pair, so each Random order is present in every depth-2 prefix
  // and must hold at least one extension class there, all its own.
  for (const LabelSeq& p : prefixes) {
    int capacity = 0;
    for (const LabelSeq& c : classes) {
      if (std::equal(p.begin(), p.end(), c.begin())) ++capacity;
    }
    d.prefix_capacity[p] = capacity;
    d.available += std::max(0, capacity - random_orders);
  }
  d.feasible = d.available >= d.needed;
  return d;
}

TheoremCertificate prove_puzzle2_unsolvable() {
  TheoremCertificate cert;
  cert.full_search = search_adaptive_solution(Channel::SortRank);
  cert.same_target_search =
      search_adaptive_solution(Channel::SortRank, SearchOptions{GodId::A});
  cert.distinct_targets = pigeonhole_summary(GodId::A, GodId::B);
  cert.same_target = same_target_deficit(GodId::A);
  cert.unsolvable = !cert.full_search.solvable && !cert.same_target_search.solvable &&
                    !cert.distinct_targets.feasible && !cert.same_target.feasible;
  cert.scope = "using only the sorting rule";
  cert.coin_note =
      "forced coins are token ranks; a meaning-level reading of the same coin "
      "corresponds one-to-one under either lexicon";
  return cert;
}

}  // namespace gods
