#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace brstack::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitNegative = 1;
inline constexpr int kExitUsage = 2;

/// Runs the command line (without the program name) and returns the exit
/// code. Subcommands: snf, br-bg, enumerate, inertia, classify; a global
/// --json switches every command to a single JSON document on `out`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Parses "2,-1;-1,2" into rows of integers. Throws ParseError.
std::vector<std::vector<std::string>> split_matrix_literal(const std::string& text);

}  // namespace brstack::cli
