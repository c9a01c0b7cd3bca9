/**
 * Command-line entry point.
 *
 * Exit status: 0 on success, 1 when a mathematical gate fails (unbounded,
 * non-simple, redundant or non-Delzant input where a Lagrangian is needed,
 * or a verification tolerance is exceeded), 2 on input errors.
 */
#pragma once

#include <ostream>

namespace toriclag::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_gate = 1;
inline constexpr int exit_input = 2;

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace toriclag::cli
