#pragma once

#include <ostream>

namespace hyperlab::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitCapacity = 3;
inline constexpr int kExitVerification = 4;

/// Environment variable holding the default seed; --seed overrides it.
inline constexpr const char* kSeedVariable = "HYPERLAB_SEED";

/// Parses argv, runs one subcommand and writes its JSON (or CSV) report to
/// `out`. Errors go to `err` as JSON; the return value is the exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hyperlab::cli
