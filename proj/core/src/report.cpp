#include "gods/report.hpp"

#include <sstream>

#include <json.hpp>

namespace gods {

namespace {

using nlohmann::json;

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json world_json(const World& w) {
  return json{{"A", to_string(w.roles[0])},
              {"B", to_string(w.roles[1])},
              {"C", to_string(w.roles[2])},
              {"yes_is_first", w.yes_is_first}};
}

std::string world_spec(const World& w) {
  std::string s;
  s += "A=" + std::string(to_string(w.roles[0]));
  s += ",B=" + std::string(to_string(w.roles[1]));
  s += ",C=" + std::string(to_string(w.roles[2]));
  s += ",yif=" + std::string(w.yes_is_first ? "1" : "0");
  return s;
}

json guess_json(const RoleAssignment& g) {
  return json{{"A", to_string(g[0])}, {"B", to_string(g[1])}, {"C", to_string(g[2])}};
}

json labels_json(const LabelSeq& labels) {
  json arr = json::array();
  for (Label l : labels) arr.push_back(to_string(l));
  return arr;
}

std::string coins_string(const std::vector<Coin>& coins) {
  std::string s;
  for (Coin c : coins) s += c == Coin::Heads ? 'H' : 'T';
  return s;
}

json stats_json(const SearchStats& stats) {
  return json{{"allocation_nodes", stats.allocation_nodes},
              {"answer_functions", stats.answer_functions},
              {"prunes", stats.prunes},
              {"target_maps", stats.target_maps}};
}

}  // namespace

std::string worlds_to_json() {
  json arr = json::array();
  for (const World& w : enumerate_worlds()) arr.push_back(world_json(w));
  return dump(arr);
}

std::string worlds_to_text() {
  std::string out;
  for (const World& w : enumerate_worlds()) out += world_spec(w) + "\n";
  return out;
}

std::string classes_to_json(int depth) {
  json arr = json::array();
  for (const LabelSeq& c : observation_classes(depth)) arr.push_back(labels_json(c));
  return dump(arr);
}

std::string classes_to_text(int depth) {
  std::string out;
  for (const LabelSeq& c : observation_classes(depth)) out += label_seq_string(c) + "\n";
  return out;
}

std::string report_to_json(const VerificationReport& report) {
  json runs = json::array();
  for (const VerifiedRun& r : report.runs) {
    json run{{"coins", coins_string(r.coins)},
             {"correct", r.correct},
             {"guess", guess_json(r.guess)},
             {"labels", labels_json(r.labels)},
             {"world", world_json(r.world)}};
    if (!r.error.empty()) run["error"] = r.error;
    runs.push_back(std::move(run));
  }
  return dump(json{{"puzzle", report.strategy_name}, {"runs", runs}, {"solved", report.solved}});
}

std::string report_to_text(const VerificationReport& report) {
  std::ostringstream out;
  out << "strategy: " << report.strategy_name << "\n";
  out << "mode: " << to_string(report.config.random_mode)
      << "  policy: " << to_string(report.config.paradox_policy) << "\n";
  std::size_t correct = 0;
  for (const VerifiedRun& r : report.runs) correct += r.correct ? 1 : 0;
  out << "runs: " << report.runs.size() << "  correct: " << correct
      << "  counterexamples: " << report.counterexamples.size() << "\n";
  out << "solved: " << (report.solved ? "yes" : "no") << "\n";
  out << "outcome classes:\n";
  for (const auto& [labels, orders] : report.class_table) {
    out << "  [" << label_seq_string(labels) << "] <-";
    for (int order : orders) out << " " << order_code(order_from_index(order));
    out << "\n";
  }
  for (std::size_t i : report.counterexamples) {
    const VerifiedRun& r = report.runs[i];
    out << "counterexample: world " << world_spec(r.world) << " coins "
        << (r.coins.empty() ? "-" : coins_string(r.coins));
    if (!r.error.empty()) {
      out << " error: " << r.error;
    } else {
      out << " labels [" << label_seq_string(r.labels) << "] guessed " << order_code(r.guess)
          << " actual " << order_code(r.world.roles);
    }
    out << "\n";
  }
  return out.str();
}

std::string certificate_to_json(const TheoremCertificate& cert) {
  json distinct{{"cases", cert.distinct_targets.cases},
                {"classes", cert.distinct_targets.classes},
                {"demand", cert.distinct_targets.demand},
                {"feasible", cert.distinct_targets.feasible},
                {"pattern", "distinct_targets"},
                {"q1", to_string(cert.distinct_targets.q1_target)},
                {"q2", to_string(cert.distinct_targets.q2_target)},
                {"shared_class", labels_json(cert.distinct_targets.shared_class)},
                {"split_orders", cert.distinct_targets.split_orders},
                {"symmetric_classes", cert.distinct_targets.symmetric_classes},
                {"unsplit_orders", cert.distinct_targets.unsplit_orders}};
  json capacity = json::object();
  for (const auto& [prefix, cap] : cert.same_target.prefix_capacity) {
    capacity[label_seq_string(prefix)] = cap;
  }
  json same{{"available", cert.same_target.available},
            {"feasible", cert.same_target.feasible},
            {"needed", cert.same_target.needed},
            {"pattern", "same_target"},
            {"prefix_capacity", capacity},
            {"q1", to_string(cert.same_target.target)},
            {"q2", to_string(cert.same_target.target)}};
  json j{{"cases", cert.distinct_targets.cases},
         {"channel", to_string(cert.full_search.channel)},
         {"classes", cert.distinct_targets.classes},
         {"coin_note", cert.coin_note},
         {"demand", cert.distinct_targets.demand},
         {"patterns", json::array({distinct, same})},
         {"puzzle", 2},
         {"scope_quote", cert.scope},
         {"search", json{{"full", stats_json(cert.full_search.stats)},
                         {"full_solvable", cert.full_search.solvable},
                         {"same_target", stats_json(cert.same_target_search.stats)},
                         {"same_target_solvable", cert.same_target_search.solvable}}},
         {"unsolvable", cert.unsolvable}};
  return dump(j);
}

std::string certificate_to_text(const TheoremCertificate& cert) {
  std::ostringstream out;
  const PigeonholeSummary& pig = cert.distinct_targets;
  const SameTargetDeficit& same = cert.same_target;
  out << "no-solution certificate for puzzle 2 (token-coin Random, no paradoxical questions,\n"
      << "three questions, " << to_string(cert.full_search.channel) << " channel)\n";
  out << "1. outcome classes after three questions: " << pig.classes << "\n";
  for (const LabelSeq& c : observation_classes(3)) {
    out << "     [" << label_seq_string(c) << "]\n";
  }
  out << "2. the first answer is always labeled 'opaque', so the first two questions are\n"
      << "   predetermined; the first target is pinned to A by god relabeling\n";
  out << "3. same-target pattern (Q1 and Q2 to one god): per depth-2 prefix capacity";
  for (const auto& [prefix, cap] : same.prefix_capacity) {
    out << " [" << label_seq_string(prefix) << "]=" << cap;
  }
  out << ";\n   the two orders with that god Random occupy every prefix, leaving "
      << same.available << " slot(s) for " << same.needed << " orders -> infeasible\n";
  out << "4. distinct-target pattern (Q1 to " << to_string(pig.q1_target) << ", Q2 to "
      << to_string(pig.q2_target) << "): " << pig.cases << " cases ("
      << pig.unsplit_orders << " orders unsplit, " << pig.split_orders
      << " split by the coin)\n";
  out << "5. exactly " << pig.symmetric_classes
      << " class is swap-symmetric and can absorb one split order: ["
      << label_seq_string(pig.shared_class) << "]\n";
  out << "6. minimum class demand " << pig.demand << " > capacity " << pig.classes
      << " -> infeasible\n";
  out << "exhaustive search agrees: full pattern "
      << (cert.full_search.solvable ? "solvable" : "no strategy") << " ("
      << cert.full_search.stats.target_maps << " target maps, "
      << cert.full_search.stats.answer_functions << " answer assignments, "
      << cert.full_search.stats.allocation_nodes << " allocation nodes); same-target "
      << (cert.same_target_search.solvable ? "solvable" : "no strategy") << " ("
      << cert.same_target_search.stats.target_maps << " target maps)\n";
  out << "verdict: " << (cert.unsolvable ? "unsolvable" : "SOLVABLE (unexpected witness)") << "\n";
  out << "scope: holds for strategies " << cert.scope << "\n";
  out << "note: " << cert.coin_note << "\n";
  return out.str();
}

}  // namespace gods
