#pragma once

#include <map>
#include <string>
#include <vector>

namespace fincat::cli {

/// exit codes: 0 success, 1 property violation, 2 input error, 3 size limit
struct CommandResult {
    int exit_code = 0;
    std::string output;
};

/// argv excludes the program name. env provides FINCAT_SEED (decimal, default
/// 0) and FINCAT_SIZE_CAP (overrides the functor cap; morphism cap is 10x).
CommandResult run(const std::vector<std::string>& argv,
                  const std::map<std::string, std::string>& env);

} // namespace fincat::cli
