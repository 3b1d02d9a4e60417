#pragma once

// Helper for tests that exercise the installed CLI binary. The build passes
// the binary's location through the LAPQ_CLI environment variable.

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <stdexcept>
#include <string>

#include <sys/wait.h>
#include <unistd.h>

namespace clirun {

struct Result {
    int exit_code = -1;
    std::string output; // stdout and stderr interleaved
};

inline std::string binary_path() {
    const char* env = std::getenv("LAPQ_CLI");
    if (env == nullptr || *env == '\0') {
        throw std::runtime_error("LAPQ_CLI is not set; run through ctest or export the CLI path");
    }
    return env;
}

inline Result run(const std::string& args) {
    const std::string cmd = binary_path() + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (pipe == nullptr) {
        throw std::runtime_error("failed to launch: " + cmd);
    }
    Result res;
    std::array<char, 4096> buf{};
    std::size_t got = 0;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) {
        res.output.append(buf.data(), got);
    }
    const int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

inline std::filesystem::path temp_file(const std::string& tag) {
    static int counter = 0;
    return std::filesystem::temp_directory_path() /
           ("lapq_test_" + std::to_string(getpid()) + "_" + std::to_string(counter++) + "_" + tag);
}

} // namespace clirun
