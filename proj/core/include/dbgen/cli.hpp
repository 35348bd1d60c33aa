#ifndef DBGEN_CLI_HPP
#define DBGEN_CLI_HPP

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace dbgen {

inline constexpr std::string_view kUsage =
    "usage: dbgen [ -version ][ -debug ] in-file out-file";

// Exit codes: 0 success, 1 usage error, 2 lex/parse error, 3 validation
// errors, 4 I/O error. Diagnostics go to err; out carries only the
// -version line (and the selftest report).
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace dbgen

#endif
