#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace glqec {

inline constexpr std::string_view kVersion = "0.1.0";

/// Parses a probability grid: "lin:a:b:k", "log:a:b:k", "paper-grid" or a
/// comma-separated list. Throws std::invalid_argument on bad input.
std::vector<double> parse_grid(std::string_view text);

/// Worker count from the GLQEC_WORKERS environment variable, else the number
/// of hardware threads.
int default_workers();

/// Entry point of the glqec tool. Returns 0 on success, 2 on invalid
/// arguments or configuration, 1 when a size limit is hit.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv);

}  // namespace glqec
