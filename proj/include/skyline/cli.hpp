#pragma once

namespace skyline::cli {

// Entry point of the command-line tool. Returns the process exit code:
// 0 success, 1 usage error, 2 runtime error.
int run_main(int argc, const char* const* argv);

}  // namespace skyline::cli
