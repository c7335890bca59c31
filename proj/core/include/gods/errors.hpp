#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gods {

/// Question DSL / strategy file syntax error, with a byte offset into the input.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : std::runtime_error(message + " (at offset " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Semantic error while evaluating a question (e.g. a token reference past the
/// start of the transcript, or a reference to an exploded answer).
class EvalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Error while walking a strategy tree (missing branch, coin exhaustion).
class StrategyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A strategy path asked Random more often than the coin source provided for.
class CoinExhaustedError : public StrategyError {
 public:
  using StrategyError::StrategyError;
};

/// Lookup of a builtin question or strategy by a name that does not exist.
class UnknownNameError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace gods
