// Command dispatch for the hpgrowth executable.
//
// Exit codes: 0 ok, 1 malformed flags or configuration, 2 singularity,
// domain or numerical failure, 3 property violation (including an
// inconclusive decay check).
#pragma once

#include <ostream>

#include "hpgrowth/core.hpp"

namespace hpgrowth::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 1;
inline constexpr int kExitNumerical = 2;
inline constexpr int kExitProperty = 3;

int exit_code_for(ErrorKind kind);

/// Parses argv and runs one subcommand: kernel, solve, cover, verify, bounds.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hpgrowth::cli
