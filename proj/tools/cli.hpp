#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace knotpoly::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1; // validation or identity failure
inline constexpr int kExitUsage = 2;

/// Runs one subcommand (jones, tutte, twist, bounds, verify, census-scan).
/// args excludes the program name.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace knotpoly::cli
