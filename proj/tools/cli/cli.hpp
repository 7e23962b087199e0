#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace safefollow::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfigError = 1;
inline constexpr int kExitIoError = 2;

// Entry point behind the `safefollow` binary. `args` excludes the program
// name. Subcommands:
//   run           --config <path> --out <dir>
//   sweep-alpha   --config <path> --alphas a1,a2,...    --out <dir>
//   sweep-latency --config <path> --latencies l1,l2,... --out <dir>
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace safefollow::cli
