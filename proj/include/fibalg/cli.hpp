#pragma once

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace fibalg::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
    kOk = 0,
    kCheckFailed = 1, ///< an identity or certificate was checked and is false
    kUsage = 2,
    kUndecided = 3, ///< the factorization budget ran out
};

struct CommandInfo {
    std::string_view path;      ///< e.g. "cert decide"
    std::string_view arguments; ///< usage synopsis
    std::vector<std::string_view> operations; ///< library operations it reaches
};

const std::vector<CommandInfo>& command_table();

/// Runs one command. JSON goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

void print_usage(std::ostream& err);

} // namespace fibalg::cli
