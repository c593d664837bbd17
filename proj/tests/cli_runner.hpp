#pragma once

// Drives the installed binary (path injected by the build as
// CREDENCE_CLI_PATH) and captures exit status, stdout and stderr through
// scratch files under the current working directory.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>

#ifndef CREDENCE_CLI_PATH
#error "build must define CREDENCE_CLI_PATH"
#endif

namespace credence::testing {

inline std::filesystem::path scratch_dir() {
    static const std::filesystem::path dir = [] {
        auto d = std::filesystem::current_path() /
                 ("scratch_" + std::to_string(::getpid()));
        std::filesystem::remove_all(d);
        std::filesystem::create_directories(d);
        return d;
    }();
    return dir;
}

inline std::string slurp(const std::filesystem::path& path) {
    std::ifstream in(path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline void spit(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path);
    out << text;
}

struct CliResult {
    int status;
    std::string out;
    std::string err;
};

inline CliResult run_cli(const std::string& args) {
    static int counter = 0;
    const auto out_file =
        scratch_dir() / ("stdout_" + std::to_string(counter));
    const auto err_file =
        scratch_dir() / ("stderr_" + std::to_string(counter));
    ++counter;

    const std::string command = std::string(CREDENCE_CLI_PATH) + " " + args +
                                " >" + out_file.string() + " 2>" +
                                err_file.string();
    const int raw = std::system(command.c_str());
    const int status =
        raw == -1 ? -1 : (WIFEXITED(raw) ? WEXITSTATUS(raw) : -1);
    return {status, slurp(out_file), slurp(err_file)};
}

} // namespace credence::testing
