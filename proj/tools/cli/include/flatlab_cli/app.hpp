#pragma once

#include <iosfwd>

namespace flatlab::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 2;
inline constexpr int kExitScale = 3;
inline constexpr int kExitInternal = 4;

/// Runs the flatlab command line. Reports go to `out`, diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace flatlab::cli
