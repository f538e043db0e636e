#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace proxigraph {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDataError = 1;
inline constexpr int kExitUsage = 2;

/// Command-line entry point; `args` excludes the program name.
///
///   <algorithm> --input FILE --output FILE [options]
///   serve [--bind ADDR] [--port N] [--cors-origin ORIGIN]
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace proxigraph
