#pragma once

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>
#include <unistd.h>

namespace cli {

inline const std::filesystem::path fixtures = GASPLAB_FIXTURES;

struct Run {
    int code = -1;
    std::string out;
};

inline auto scratch() -> std::filesystem::path
{
    auto dir = std::filesystem::temp_directory_path() / ("gasplab-test-" + std::to_string(::getpid()));
    std::filesystem::create_directories(dir);
    return dir;
}

inline auto slurp(const std::filesystem::path & p) -> std::string
{
    std::ifstream in(p);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
}

// Runs the CLI with `args` (already shell-quoted), optionally under an environment prefix.
inline auto run(const std::string & args, const std::string & env = "") -> Run
{
    auto out = scratch() / "stdout.txt";
    std::string cmd = env + " \"" GASPLAB_CLI "\" " + args + " > \"" + out.string() + "\" 2>/dev/null";
    int status = std::system(cmd.c_str());
    Run r;
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = slurp(out);
    return r;
}

inline auto fixture(const std::string & name) -> std::string { return "\"" + (fixtures / name).string() + "\""; }

} // namespace cli
