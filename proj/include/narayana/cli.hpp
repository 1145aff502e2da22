#pragma once

namespace narayana::cli {

// Exit codes shared by every subcommand.
enum ExitCode : int {
    exit_ok = 0,
    exit_usage = 1,
    exit_falsified = 2,
    exit_io = 3,
    exit_no_certificate = 4,
};

int run(int argc, const char* const* argv);

}  // namespace narayana::cli
