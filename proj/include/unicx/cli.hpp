#pragma once

// Command-line front end.  Exit codes: 0 success, 1 verification failure,
// 2 usage or input error, 3 resource budget exceeded.

#include <iosfwd>

namespace unicx {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerification = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitResource = 3;

int dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace unicx
