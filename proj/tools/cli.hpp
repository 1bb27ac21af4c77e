#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace witt::cli {

constexpr const char* kSchema = "witt-cli/1";

enum Exit : int { kPass = 0, kFailures = 1, kUsage = 2 };

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace witt::cli
