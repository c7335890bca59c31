#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "gods/errors.hpp"
#include "gods/report.hpp"

namespace {

using namespace gods;

World parse_world_spec(const std::string& spec) {
  RoleAssignment roles{};
  std::array<bool, 3> seen{};
  std::optional<bool> yif;
  std::size_t start = 0;
  while (start < spec.size()) {
    std::size_t end = spec.find(',', start);
    if (end == std::string::npos) end = spec.size();
    std::string part = spec.substr(start, end - start);
    start = end + 1;
    std::size_t eq = part.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument("world spec expects <key>=<value>, got '" + part + "'");
    }
    std::string key = part.substr(0, eq);
    std::string value = part.substr(eq + 1);
    if (key == "yif") {
      if (value != "0" && value != "1") throw std::invalid_argument("yif must be 0 or 1");
      yif = value == "1";
      continue;
    }
    auto god = god_from_string(key);
    if (!god) throw std::invalid_argument("unknown world spec key '" + key + "'");
    auto role = role_from_string(value);
    if (!role) throw std::invalid_argument("unknown role '" + value + "'");
    std::size_t idx = static_cast<std::size_t>(*god);
    if (seen[idx]) throw std::invalid_argument("god " + key + " assigned twice");
    seen[idx] = true;
    roles[idx] = *role;
  }
  if (!(seen[0] && seen[1] && seen[2]) || !yif) {
    throw std::invalid_argument("world spec must assign A, B, C and yif");
  }
  if (!is_bijection(roles)) {
    throw std::invalid_argument("world roles must be a bijection onto {true,false,random}");
  }
  return World{roles, *yif};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot read file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Transcript load_transcript(const std::string& path) {
  Transcript transcript;
  std::istringstream in(read_file(path));
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream fields(line);
    std::string god_name, word;
    if (!(fields >> god_name)) continue;
    if (!(fields >> word)) {
      throw std::invalid_argument("transcript line " + std::to_string(lineno) +
                                  ": expected '<god> <first|second|boom>'");
    }
    auto god = god_from_string(god_name);
    if (!god) {
      throw std::invalid_argument("transcript line " + std::to_string(lineno) +
                                  ": unknown god '" + god_name + "'");
    }
    Answer answer = Answer::boom();
    if (word == "first") {
      answer = Answer::of(Token::First);
    } else if (word == "second") {
      answer = Answer::of(Token::Second);
    } else if (word != "boom") {
      throw std::invalid_argument("transcript line " + std::to_string(lineno) +
                                  ": unknown answer '" + word + "'");
    }
    transcript.push_back({*god, answer});
  }
  return transcript;
}

QuestionPtr load_question(const std::string& ref) {
  constexpr std::string_view kPrefix = "builtin:";
  if (ref.rfind(kPrefix, 0) == 0) return builtin_question(ref.substr(kPrefix.size()));
  return parse_question(ref);
}

StrategyTree load_strategy(const std::string& ref) {
  constexpr std::string_view kPrefix = "builtin:";
  if (ref.rfind(kPrefix, 0) == 0) return builtin_strategy(ref.substr(kPrefix.size()));
  return parse_strategy(read_file(ref));
}

RunConfig make_config(const std::string& mode, const std::string& policy) {
  RunConfig config;
  config.random_mode = mode == "boolos" ? RandomMode::BoolosCoin : RandomMode::TokenCoin;
  config.paradox_policy = policy == "answer-no" ? ParadoxPolicy::AnswerNo : ParadoxPolicy::Explode;
  return config;
}

class Timer {
 public:
  explicit Timer(bool enabled) : enabled_(enabled) {}
  ~Timer() {
    if (!enabled_) return;
    auto elapsed = std::chrono::steady_clock::now() - start_;
    std::cerr << "timing_ms: "
              << std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count() << "\n";
  }

 private:
  bool enabled_;
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exhaustive checker for three-gods interrogation puzzles in an unknown language"};
  app.require_subcommand(1);

  std::string format = "text";

  auto* worlds_cmd = app.add_subcommand("worlds", "list the 12 possible worlds");
  std::string worlds_format = "text";
  worlds_cmd->add_option("--format", worlds_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  auto* classes_cmd =
      app.add_subcommand("classes", "list canonical observation classes at a given depth");
  int depth = 3;
  std::string classes_format = "text";
  classes_cmd->add_option("--depth", depth, "number of answers")->check(CLI::Range(1, 12));
  classes_cmd->add_option("--format", classes_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  auto* eval_cmd = app.add_subcommand("eval", "evaluate one question in one world");
  std::string question_ref, world_spec, to_god, coin_arg, mode = "boolos", policy = "answer-no";
  std::string transcript_path, eval_format = "text";
  eval_cmd->add_option("--question", question_ref, "DSL text or builtin:<name>")->required();
  eval_cmd->add_option("--world", world_spec, "A=<role>,B=<role>,C=<role>,yif=0|1")->required();
  eval_cmd->add_option("--to", to_god, "respondent: A, B or C")->required();
  eval_cmd->add_option("--coin", coin_arg, "H or T; required iff the respondent is Random")
      ->check(CLI::IsMember({"H", "T"}));
  eval_cmd->add_option("--mode", mode, "boolos or coin")->check(CLI::IsMember({"boolos", "coin"}));
  eval_cmd->add_option("--policy", policy, "answer-no or explode")
      ->check(CLI::IsMember({"answer-no", "explode"}));
  eval_cmd->add_option("--transcript", transcript_path, "prior answers, one '<god> <word>' per line");
  eval_cmd->add_option("--format", eval_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  auto* verify_cmd =
      app.add_subcommand("verify", "check a strategy against every world and coin branch");
  std::string strategy_ref, verify_mode = "boolos", verify_policy = "answer-no";
  std::string verify_format = "text";
  bool verify_timing = false;
  verify_cmd->add_option("--strategy", strategy_ref, "builtin:<name> or a strategy file path")
      ->required();
  verify_cmd->add_option("--mode", verify_mode, "boolos or coin")
      ->check(CLI::IsMember({"boolos", "coin"}));
  verify_cmd->add_option("--policy", verify_policy, "answer-no or explode")
      ->check(CLI::IsMember({"answer-no", "explode"}));
  verify_cmd->add_option("--format", verify_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  verify_cmd->add_flag("--timing", verify_timing, "print wall-clock time to stderr");

  auto* prove_cmd = app.add_subcommand("prove", "emit the no-solution certificate for a puzzle");
  int puzzle = 0;
  std::string prove_format = "text";
  bool prove_timing = false;
  prove_cmd->add_option("--puzzle", puzzle, "puzzle number")->required();
  prove_cmd->add_option("--format", prove_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  prove_cmd->add_flag("--timing", prove_timing, "print wall-clock time to stderr");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (worlds_cmd->parsed()) {
      std::cout << (worlds_format == "json" ? worlds_to_json() : worlds_to_text());
      return 0;
    }
    if (classes_cmd->parsed()) {
      std::cout << (classes_format == "json" ? classes_to_json(depth) : classes_to_text(depth));
      return 0;
    }
    if (eval_cmd->parsed()) {
      QuestionPtr question = load_question(question_ref);
      World world = parse_world_spec(world_spec);
      auto god = god_from_string(to_god);
      if (!god) throw std::invalid_argument("unknown respondent '" + to_god + "'");
      std::optional<Coin> coin;
      if (!coin_arg.empty()) coin = coin_arg == "H" ? Coin::Heads : Coin::Tails;
      RunConfig config = make_config(mode, policy);
      Transcript transcript;
      if (!transcript_path.empty()) transcript = load_transcript(transcript_path);
      Answer answer = answer_question(*question, world, *god, coin, config, transcript);
      std::optional<Label> label;
      if (!transcript_path.empty()) {
        std::vector<Answer> heard;
        for (const TranscriptEntry& e : transcript) heard.push_back(e.answer);
        heard.push_back(answer);
        label = canonicalize(heard).back();
      }
      std::string word = answer.is_boom() ? "boom" : std::string(to_string(answer.tok()));
      if (eval_format == "json") {
        std::string out = "{\n  \"answer\": \"" + word + "\"";
        if (label) out += ",\n  \"label\": \"" + std::string(to_string(*label)) + "\"";
        std::cout << out << "\n}\n";
      } else {
        std::cout << word << "\n";
        if (label) std::cout << "label: " << to_string(*label) << "\n";
      }
      return 0;
    }
    if (verify_cmd->parsed()) {
      Timer timer(verify_timing);
      StrategyTree tree = load_strategy(strategy_ref);
      ValidationReport validation = validate_strategy(tree);
      if (!validation.ok()) {
        for (const ValidationIssue& issue : validation.issues) {
          std::cerr << "invalid strategy at " << issue.where << ": " << issue.message << "\n";
        }
        return 2;
      }
      RunConfig config = make_config(verify_mode, verify_policy);
      VerificationReport report = verify_strategy(tree, config, strategy_ref);
      std::cout << (verify_format == "json" ? report_to_json(report) : report_to_text(report));
      return report.solved ? 0 : 1;
    }
    if (prove_cmd->parsed()) {
      if (puzzle != 2) {
        std::cerr << "no impossibility claim for puzzle " << puzzle << "\n";
        return 2;
      }
      Timer timer(prove_timing);
      TheoremCertificate cert = prove_puzzle2_unsolvable();
      std::cout << (prove_format == "json" ? certificate_to_json(cert)
                                           : certificate_to_text(cert));
      return cert.unsolvable ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
