#pragma once

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <stdexcept>
#include <string>

struct ProcessResult {
    std::string out;
    int exit_code = -1;
};

/// Runs a shell command and captures stdout.
inline ProcessResult run_shell(const std::string& command) {
    FILE* pipe = popen(command.c_str(), "r");
    if (!pipe) throw std::runtime_error("popen failed for " + command);
    ProcessResult result;
    std::array<char, 4096> buffer{};
    std::size_t got = 0;
    while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) result.out.append(buffer.data(), got);
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

/// Runs `BARCOUNT_CLI <args>` and captures stdout.
inline ProcessResult run_cli(const std::string& args) {
    return run_shell(std::string(BARCOUNT_CLI) + " " + args + " 2>/dev/null");
}
