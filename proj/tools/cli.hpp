#pragma once

#include <ostream>
#include <span>
#include <string>

namespace gofk::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalidInput = 1;
inline constexpr int kExitUnrecognized = 2;

// Dispatches one command line (without the program name). Output is written
// to `out` in a single write; diagnostics go to `err`.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace gofk::cli
