#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qcpn::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 1;
inline constexpr int kExitUsage = 2;

/// Runs one invocation of the `qcpn` tool. `args` excludes the program name.
/// Payload goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qcpn::cli
