#pragma once

#include <string>
#include <vector>

namespace carlson::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 2;
inline constexpr int kExitUsage = 64;

struct Outcome {
    int code = kExitOk;
    std::string out;
    std::string err;
};

/// Runs one invocation; `args` excludes the program name.
Outcome run(const std::vector<std::string>& args);

}  // namespace carlson::cli
