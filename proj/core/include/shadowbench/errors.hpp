#pragma once

#include <stdexcept>
#include <string>

namespace shadowbench {

struct EngineError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct BudgetExhaustedError : EngineError {
  using EngineError::EngineError;
};

struct IllegalActionError : EngineError {
  using EngineError::EngineError;
};

struct UnknownGameError : EngineError {
  using EngineError::EngineError;
};

struct MissingLevelError : EngineError {
  using EngineError::EngineError;
};

struct LevelParseError : EngineError {
  LevelParseError(const std::string& what, int line, int col)
      : EngineError(what + " (line " + std::to_string(line) + ", col " +
                    std::to_string(col) + ")"),
        line(line),
        col(col) {}
  int line;
  int col;
};

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct AnalysisError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace shadowbench
