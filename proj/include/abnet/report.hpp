#pragma once
// Command reports built on top of the analysis modules. Each command returns
// a JSON report plus the process exit status it implies.
#include <cstdint>
#include <optional>
#include <string>

#include "abnet/document.hpp"

namespace abnet {

enum ExitStatus : int {
  kExitOk = 0,
  kExitInternal = 1,
  kExitValidation = 2,
  kExitNonHalting = 3,
  kExitBudget = 4,
};

/// Exit status for an error kind.
int exit_status(ErrorKind kind);

struct CommandOptions {
  std::optional<std::uint64_t> budget;
  std::uint64_t seed = 0;
  bool refine_cycles = false;
  std::string pending;  // "a=2,b=1"
  std::string state;    // "u=1,v=0"
  std::string alpha;    // "a=0.5,b=0.5"; empty means uniform
  std::uint64_t steps = 10'000;
};

struct Report {
  Json body;
  int status = kExitOk;
};

/// analyze | simulate | recurrent | burning | oracle | markov | sandpilize.
/// Throws Error for invalid input and for conditions without a report
/// (for example a non-halting network given to the burning test).
Report run_command(const std::string& command, const NetworkDocument& doc, const CommandOptions& options);

/// Structured output is pretty-printed JSON; text output is an indented
/// key: value listing of the same data.
std::string render(const Json& body, bool structured);

}  // namespace abnet
