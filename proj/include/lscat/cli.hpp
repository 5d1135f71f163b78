#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lscat {

inline constexpr const char* kEngineVersion = "0.1.0";

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;         // usage, I/O or parse error
inline constexpr int kExitPrecondition = 2;  // non-elliptic input, k != 3, ...
inline constexpr int kExitInconsistent = 3;  // oracle/spectral disagreement, failed verification

// Entry point of the lscat tool; args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lscat
