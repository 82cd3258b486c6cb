#pragma once

#include <string>
#include <vector>

#include "tropirep/groups.hpp"

namespace tropirep {

// CLI exit codes (0 = success).
inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitParse = 2;
inline constexpr int kExitCapacity = 3;
inline constexpr int kExitUnsupported = 4;
inline constexpr int kExitRankDeficient = 5;

// Group spec grammar: "C<n>" for cyclic, "C<a>xC<b>x..." for products,
// "D<m>" for the dihedral group of order 2m, "S3" as an alias for D3, or
// "@<path>" to load a Cayley file.
FiniteGroup parse_group_spec(const std::string& spec);

struct CliResult {
  int exit_code = 0;
  std::string out;  // what goes to stdout
  std::string err;  // what goes to stderr
};

// Runs one CLI invocation; args exclude the program name.  Never throws:
// every failure is mapped onto an exit code and a message.
CliResult run_cli(const std::vector<std::string>& args);

}  // namespace tropirep
