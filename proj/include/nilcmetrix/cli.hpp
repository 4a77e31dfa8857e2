#pragma once

#include <iosfwd>

namespace nilcmetrix {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitData = 2;

/// Command-line entry point: list, compute, compare, export-features.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace nilcmetrix
