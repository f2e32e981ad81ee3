#ifndef ONEPOINT_CLI_HPP
#define ONEPOINT_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace onepoint
{

enum ExitCode : int {
    exit_ok = 0,
    exit_error = 1,
    exit_parse = 2,
    exit_not_pointed = 3,
    exit_mismatch = 4,
    exit_out_of_scope = 5,
};

// args excludes the program name. Input files named "-" (or omitted) are read from in.
int run_cli(const std::vector<std::string> &args, std::istream &in, std::ostream &out, std::ostream &err);

} // namespace onepoint

#endif
