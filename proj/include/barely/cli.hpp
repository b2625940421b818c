#pragma once

// Command-line front end. Every command writes one JSON object per line to
// `out` and returns 0 (property holds / all checks pass), 1 (negative
// verdict or discrepancy) or 2 (usage, parse or I/O error).

#include <iosfwd>
#include <string>
#include <vector>

namespace barely::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitNegative = 1;
inline constexpr int kExitUsage = 2;

// Environment variable naming a directory for classification caches.
inline constexpr const char* kCacheDirEnv = "BARELY_CACHE_DIR";

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace barely::cli
