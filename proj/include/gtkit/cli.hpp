#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gtkit {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitLimit = 3;

/// Environment variable overriding the default coset limit.
inline constexpr const char* kMaxCosetsEnv = "GTKIT_MAX_COSETS";

/// Runs the command line `args` (without the program name) and returns the
/// exit code. Subcommands: verify, braid {nf,eq,perm}, tc, snf, sl2word,
/// subgroup {basis,rewrite}.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gtkit
