#pragma once

#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include <lonely/big_count.hpp>

namespace lonely::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 2;
inline constexpr int kExitUsage = 64;
inline constexpr int kExitCeiling = 65;

/// Largest n for the streaming commands (enumerate, intersection).
inline constexpr int kStreamCeiling = 18;

/// Environment variable holding the default worker count.
inline constexpr const char* kWorkersEnv = "LONELY_WORKERS";

/// Exact JSON encoding of a count: a number while IEEE doubles still hold it
/// exactly (up to 2^53), a decimal string beyond.
nlohmann::ordered_json json_count(const BigCount& value);

/// Runs one invocation. `args` excludes the program name. Reports go to
/// `out` unless --output is given; diagnostics and progress go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lonely::cli
