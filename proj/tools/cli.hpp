#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace nck3::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFail = 1;      // a verdict failed under --strict
inline constexpr int kExitUsage = 2;     // usage, parse or input errors
inline constexpr int kExitInternal = 3;  // broken internal invariants

/// Runs one command line (without the program name).
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nck3::cli
