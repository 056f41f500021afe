#ifndef EHF_TOOLS_CLI_HH
#define EHF_TOOLS_CLI_HH

#include <iosfwd>
#include <string>
#include <vector>

namespace ehf::cli
{
    enum ExitStatus
    {
        ok = 0,
        absent = 1,
        falsified = 2,
        input_error = 3,
        budget_exceeded = 4
    };

    /// The whole command line; `args` excludes the program name. Graphs named
    /// "-" are read from `in`.
    auto run(const std::vector<std::string> & args, std::istream & in, std::ostream & out, std::ostream & err) -> int;
}

#endif
