#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace trisum::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  ///< a verification did not pass
inline constexpr int kExitUsage = 2;    ///< bad flags or a domain error

/// Runs the command line tool. args excludes the program name. Never throws
/// for user input; everything is mapped to an exit code and a message on err.
/// TRISUM_MAX_TERMS in the environment overrides the series term cap.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace trisum::cli
