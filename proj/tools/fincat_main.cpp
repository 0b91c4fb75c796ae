#include "fincat/cli.hpp"

#include <cstdio>
#include <cstdlib>

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    std::map<std::string, std::string> env;
    if (const char* seed = std::getenv("FINCAT_SEED")) env["FINCAT_SEED"] = seed;
    if (const char* cap = std::getenv("FINCAT_SIZE_CAP")) env["FINCAT_SIZE_CAP"] = cap;
    auto result = fincat::cli::run(args, env);
    std::fwrite(result.output.data(), 1, result.output.size(), stdout);
    return result.exit_code;
}
