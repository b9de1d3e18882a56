#pragma once

#include <ostream>

namespace maxplus::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitVerdictFalse = 2;
inline constexpr int kExitInternal = 3;

/// Runs one command line and returns its exit code; output goes to the given
/// streams only.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace maxplus::cli
