#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pyrofuse {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  // failed scenario, no threshold crossing, I/O error
inline constexpr int kExitUsage = 2;

/// Entry point of the `pyrofuse` tool.  args[0] is the program name.  Every
/// flag may also come from an environment variable PYROFUSE_<FLAG>, with
/// dashes turned into underscores (e.g. PYROFUSE_P_MIN).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pyrofuse
