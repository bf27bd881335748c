#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace effprice::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_data_error = 1;
inline constexpr int exit_usage = 2;

/// Runs one invocation. `args` excludes the program name. Results go to `out`
/// (or the --out file); diagnostics and usage go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace effprice::cli
