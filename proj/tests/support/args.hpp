#pragma once

#include <cstdlib>
#include <string>
#include <vector>

namespace testsupport {

inline std::string& cli_path() {
  static std::string path;
  return path;
}

inline std::string& data_dir() {
  static std::string dir = "tests/data";
  return dir;
}

// Pulls --cli=<path> and --data=<dir> out of argv; returns what is left for
// the test framework. GODS_CLI / GODS_DATA work as fallbacks.
inline std::vector<char*> extract_args(int argc, char** argv) {
  std::vector<char*> rest;
  for (int i = 0; i < argc; ++i) {
    std::string arg = argv[i];
    if (arg.rfind("--cli=", 0) == 0) {
      cli_path() = arg.substr(6);
      continue;
    }
    if (arg.rfind("--data=", 0) == 0) {
      data_dir() = arg.substr(7);
      continue;
    }
    rest.push_back(argv[i]);
  }
  if (cli_path().empty()) {
    if (const char* env = std::getenv("GODS_CLI")) cli_path() = env;
  }
  if (const char* env = std::getenv("GODS_DATA")) data_dir() = env;
  return rest;
}

}  // namespace testsupport
