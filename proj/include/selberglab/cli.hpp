#ifndef SELBERGLAB_CLI_HPP
#define SELBERGLAB_CLI_HPP

#include <string>

namespace selberglab::cli {

struct CommandRequest {
    std::string subcommand;  // invariants | classify | structural | verify-quadratic |
                             // verify-identity | period-check | sweep
    std::string input;       // catalog name or JSON document path
    bool input_is_path = false;
    std::string mode;        // "exact" | "float" | "" (empty = SELBERGLAB_MODE or exact)
    int l_max = 8;           // structural
    int N = 3;               // verify-quadratic
    double T = 20.0;         // oracle height
    std::string family;      // sweep: hecke | maass
    std::string grid;        // sweep: "a:b:n" or comma-separated rational parameters
};

struct RunResult {
    int exit_code = 0;       // 0 all checks pass, 1 check failure, 2 input error
    std::string report;      // canonical JSON document
};

// executes the request; never throws — input problems become exit 2 reports
RunResult run(const CommandRequest& request);

}  // namespace selberglab::cli

#endif
