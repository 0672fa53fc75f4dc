#pragma once

// Command-line driver. Exit codes: 0 success, 1 golden mismatch,
// 2 unrecognized motive, 3 invalid input, 4 catalog exhausted.

#include <iosfwd>
#include <string>

namespace ihc::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitGoldenMismatch = 1;
inline constexpr int kExitUnrecognized = 2;
inline constexpr int kExitInvalidInput = 3;
inline constexpr int kExitCatalogExhausted = 4;

// Catalog extension loaded when --catalog is not given; empty disables it.
std::string default_catalog_path();

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ihc::cli
