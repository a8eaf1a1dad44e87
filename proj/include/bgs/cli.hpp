#ifndef BGS_CLI_HPP
#define BGS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace bgs::cli
{

enum class OutputFormat { plain, csv, json };

// Process exit codes.
inline constexpr int exit_ok = 0;
inline constexpr int exit_usage = 1;
inline constexpr int exit_dissent = 2;

// Runs the command line `args` (without the program name). Results go to
// `out`, diagnostics to `err`; the return value is the exit status.
int run(std::vector<std::string> args, std::ostream &out, std::ostream &err);

} // namespace bgs::cli

#endif
