#pragma once

#include <array>
#include <cstdio>
#include <stdexcept>
#include <string>

namespace psl::testutil {

struct RunResult {
    int exit_code = -1;
    std::string output; // stdout only
};

inline RunResult run_command(const std::string& cmd) {
    RunResult res;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) throw std::runtime_error("popen failed for: " + cmd);
    std::array<char, 4096> buf;
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) res.output.append(buf.data(), got);
    int status = pclose(pipe);
    res.exit_code = (status >= 0 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
    return res;
}

inline std::string cli_path() {
#ifdef PSL_CLI_BIN
    return PSL_CLI_BIN;
#else
    return "./padic-siegel-lab";
#endif
}

} // namespace psl::testutil
