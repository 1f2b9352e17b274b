// Copyright 2026 The latgame Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// latgame: solve, core and traffic-sharing reports for games on lattices.

#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "commands.hpp"

int main(int argc, char** argv)
{
    using namespace latgame;
    using namespace latgame::cli;

    CLI::App app{"Exact solutions, cores and separability for games on subset, partition and "
                 "embedded-subset lattices"};
    app.require_subcommand(1);

    Options opt;
    int max_n = 0;
    std::string solver = "su";
    std::string format = "json";
    std::string input;

    const std::map<std::string, std::string> solvers{{"shapley", "shapley"},   {"su", "su"},
                                                     {"cu", "cu"},             {"egalitarian", "egalitarian"},
                                                     {"myerson", "myerson"}};
    const std::map<std::string, std::string> formats{{"json", "json"}, {"csv", "csv"}};

    auto common = [&](CLI::App* sub) {
        sub->add_option("--max-n", max_n, "Largest player count accepted (overrides LATTICE_GAMES_MAX_N)");
        sub->add_option("--format", format, "Output format")->transform(CLI::CheckedTransformer(formats));
        sub->add_flag("--decimals", opt.decimals, "CSV only: add an approximate decimal column");
    };

    auto* solve_cmd = app.add_subcommand("solve", "Point-valued solution of a game file");
    solve_cmd->add_option("game", input, "Game JSON file")->required();
    solve_cmd->add_option("--solver", solver, "shapley|su|cu|egalitarian|myerson")
        ->transform(CLI::CheckedTransformer(solvers));
    solve_cmd->add_option("--split", opt.split, "Split edge shares to nodes: 'equal' or a weights file");
    solve_cmd->add_option("--graph", opt.graph, "Communication graph for myerson, e.g. '1-2;2-3'");
    solve_cmd->add_flag("--no-bottom-normalize", [&](std::int64_t) { opt.normalize = false; },
                        "Keep the bottom worth instead of shifting it to zero");
    common(solve_cmd);

    auto* core_cmd = app.add_subcommand("core", "Core non-emptiness with witness or certificate");
    core_cmd->add_option("game", input, "Game JSON file")->required();
    core_cmd->add_flag("--no-bottom-normalize", [&](std::int64_t) { opt.normalize = false; },
                       "Keep the bottom worth instead of shifting it to zero");
    common(core_cmd);

    auto* net_cmd = app.add_subcommand("netshare", "Per-period edge and node shares of a traffic trace");
    net_cmd->add_option("trace", input, "Trace file (JSON or CSV period,i,j,volume)")->required();
    net_cmd->add_option("--solver", solver, "su|cu|egalitarian")->transform(CLI::CheckedTransformer(solvers));
    net_cmd->add_option("--split", opt.split, "'equal' (default) or a weights file");
    net_cmd->add_option("--cluster-file", opt.cluster_file, "Clustering partition(s), one per line");
    common(net_cmd);

    auto* paper_cmd = app.add_subcommand("paper-examples", "Re-check the reference worked examples");
    paper_cmd->add_option("--inject-fault", opt.inject_fault, "ratio-table|rank-table|core-rhs");
    common(paper_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? ok : bad_input;
    }

    return guarded(
        [&] {
            if (max_n != 0) {
                opt.max_n = max_n;
            }
            opt.solver = parse_solver(solver);
            opt.format = format == "csv" ? Format::csv : Format::json;
            if (solve_cmd->parsed()) {
                return cmd_solve(input, opt, std::cout);
            }
            if (core_cmd->parsed()) {
                return cmd_core(input, opt, std::cout);
            }
            if (net_cmd->parsed()) {
                return cmd_netshare(input, opt, std::cout);
            }
            return cmd_paper_examples(opt, std::cout);
        },
        std::cerr);
}
