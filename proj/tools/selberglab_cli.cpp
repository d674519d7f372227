#include "selberglab/cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

int main(int argc, char** argv) {
    CLI::App app{"invariant computation and cross-verification for degree-2, "
                 "conductor-1 functional equations"};
    app.require_subcommand(1);

    selberglab::cli::CommandRequest req;
    std::string output_path;

    auto add_common = [&](CLI::App* sub, bool needs_input) {
        if (needs_input)
            sub->add_option("input", req.input, "catalog entry name or JSON document path")
                ->required();
        sub->add_option("--mode", req.mode, "exact|float (default: SELBERGLAB_MODE or exact)");
        sub->add_option("-o,--output", output_path, "write the JSON report to a file");
    };

    add_common(app.add_subcommand("invariants", "functional-equation invariants"), true);
    add_common(app.add_subcommand("classify", "modularity classification"), true);
    auto* structural = app.add_subcommand("structural", "structural sequence cross-check");
    structural->add_option("--lmax", req.l_max, "highest index computed (default 8)");
    structural->add_option("--T", req.T, "oracle base height (default 20)");
    add_common(structural, true);
    auto* quad = app.add_subcommand("verify-quadratic", "universal quadratic form residual");
    quad->add_option("--N", req.N, "form index (default 3)");
    add_common(quad, true);
    add_common(app.add_subcommand("verify-identity", "reflection/S-symmetry/duplication suite"),
               true);
    add_common(app.add_subcommand("period-check", "three-term and modularity residual grid"),
               true);
    auto* sweep = app.add_subcommand("sweep", "batch invariant and constraint tables");
    sweep->add_option("--family", req.family, "hecke|maass")->required();
    sweep->add_option("--grid", req.grid, "'a:b:n' or comma-separated rational parameters")
        ->required();
    add_common(sweep, false);

    CLI11_PARSE(app, argc, argv);

    req.subcommand = app.get_subcommands().front()->get_name();
    req.input_is_path = !req.input.empty() && std::filesystem::exists(req.input);

    auto result = selberglab::cli::run(req);
    if (output_path.empty()) {
        std::cout << result.report;
    } else {
        std::ofstream out(output_path);
        if (!out) {
            std::cerr << "cannot write " << output_path << "\n";
            return 2;
        }
        out << result.report;
    }
    return result.exit_code;
}
