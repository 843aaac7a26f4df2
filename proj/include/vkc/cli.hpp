#pragma once

#include <ostream>

namespace vkc {

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int invalid = 2;
inline constexpr int not_found = 3;
inline constexpr int verify_failed = 4;
inline constexpr int usage = 64;
inline constexpr int no_input = 66;
inline constexpr int state_limit = 69;
}  // namespace exit_code

/// The `vkc` command line. Output goes to `out`, diagnostics to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace vkc
