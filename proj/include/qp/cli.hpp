#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qp::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitComputation = 1;
inline constexpr int kExitUsage = 2;

/// Runs `qp` with the given arguments (program name excluded). Returns the
/// process exit code: 0 on success (an empty search is a success), 2 on a
/// usage error, 1 when a computation fails.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qp::cli
