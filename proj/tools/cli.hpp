#pragma once

#include <iosfwd>

#include "cdindex/errors.hpp"

namespace cdindex::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitIo = 1;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitUsage = 64;

// Exit status for a library failure: malformed input maps to kExitIo,
// everything else (the input parsed but failed a precondition) to
// kExitValidation.
int exit_code(ErrorKind kind) noexcept;

// Entry point of the command-line tool; argv[0] is the program name.
int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace cdindex::cli
