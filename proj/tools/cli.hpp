#pragma once

#include <iosfwd>

namespace geoclique::cli {

// Exit codes: 0 success, 2 input error, 3 invariant violation.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 2;
inline constexpr int kExitInvariant = 3;

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace geoclique::cli
