#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "pfree/exact_arith.hpp"
#include "pfree/numverify.hpp"

namespace pfree::cli {

enum class Subcommand { Euler, Quotient, Stabilize, Sphere, Lens, Kawasaki, Suspend, Cpn, Check, VerifyMc };

struct RunConfig {
  Subcommand subcommand = Subcommand::Euler;
  std::optional<std::string> input_path;  // standard input when empty
  std::optional<Integer> r;               // quotient
  std::optional<Integer> p;               // lens, suspend
  std::optional<Integer> q;               // lens
  std::string check_name;                 // check
  McConfig mc;                            // verify-mc
};

/// 0: computed or check passed; 1: a check failed; 2: bad input or precondition.
struct RunResult {
  int exit_code = 0;
  std::string output;  // one JSON document, newline-terminated
};

RunResult run(const RunConfig& cfg, std::istream& input);

/// Parses argv (including argv[0]) and runs. Usage errors give exit 2.
RunResult run_args(const std::vector<std::string>& args, std::istream& input);

}  // namespace pfree::cli
