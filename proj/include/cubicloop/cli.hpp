#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "cubicloop/error.hpp"
#include "cubicloop/surface.hpp"

namespace cubicloop {

namespace exit_code {
inline constexpr int kOk = 0;
inline constexpr int kVerificationFailed = 1;
inline constexpr int kInputError = 2;
inline constexpr int kPrecisionFailure = 3;
}  // namespace exit_code

int exit_code_for(ErrorKind kind);

/// Scales an exact point so its last coordinate of least valuation is 1
/// when that coordinate is p^k times +-T^i; other points are returned as
/// normalize_point leaves them.
ProjPoint display_form(const ProjPoint& P);

/// Entry point of the command-line tool.  Output goes to `out`, diagnostics
/// to `err`; the return value is the process exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cubicloop
