#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rdi::cli {

enum ExitCode : int { kPass = 0, kPhysicsFail = 1, kConfigFail = 2, kIoFail = 3 };

// Environment variable that overrides the output directory unless --out is given.
inline constexpr const char* kOutDirEnv = "RDI_OUT_DIR";

// Full command-line entry point; never throws.
int run_app(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rdi::cli
