#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace replab::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

/// Entry point of the `replab` tool, minus argv[0]. Data goes to `out`,
/// diagnostics to `err`. Returns 0 on success or a passing verification, 1
/// when a verification finds counterexamples, 2 on usage errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace replab::cli
