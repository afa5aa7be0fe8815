#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace frieze::cli {

// Exit codes: 0 ok, 1 domain error, 2 usage error.
inline constexpr int exit_ok = 0;
inline constexpr int exit_domain = 1;
inline constexpr int exit_usage = 2;

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace frieze::cli
