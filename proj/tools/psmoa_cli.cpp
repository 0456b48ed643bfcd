// psmoa: policy-aware multi-objective replica placement simulator.
//
// Subcommands:
//   run       one algorithm run -> front.csv/front.json, trace.jsonl, manifest.json
//   compare   NSGA-II vs NSGA-III vs PSMOA over a seed list -> metrics tables
//   daycycle  24-hour adaptation experiment -> weight/performance series
//   scale     small/medium/large study -> scatter data + scaling summary
//
// Exit codes: 0 success, 1 runtime failure, 2 usage or configuration error.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "cli_commands.hpp"

namespace {

std::vector<std::uint64_t> parse_seed_range(const std::string& text) {
    const auto sep = text.find("..");
    if (sep == std::string::npos)
        throw psmoa::cli::ConfigError("--seeds expects A..B (inclusive range), got '" + text + "'");
    const std::uint64_t lo = std::stoull(text.substr(0, sep));
    const std::uint64_t hi = std::stoull(text.substr(sep + 2));
    if (hi < lo) throw psmoa::cli::ConfigError("--seeds range is empty: " + text);
    if (hi - lo > 10000) throw psmoa::cli::ConfigError("--seeds range too large: " + text);
    std::vector<std::uint64_t> seeds;
    for (std::uint64_t s = lo; s <= hi; ++s) seeds.push_back(s);
    return seeds;
}

void add_common_flags(CLI::App* cmd, psmoa::cli::Options& opt, std::string& seeds_range,
                      long long& single_seed) {
    cmd->add_option("--scale", opt.scale, "Scenario scale: small, medium, large")
        ->check(CLI::IsMember({"small", "medium", "large"}));
    cmd->add_option("--scenario", opt.scenario_file, "Scenario file (psmoa-scenario/1)");
    cmd->add_option("--scenario-seed", opt.scenario_seed,
                    "Seed for generated scenarios in multi-seed commands");
    cmd->add_option("--policy", opt.policy_file, "Policy file (psmoa-policy/1)");
    cmd->add_option("--schedule", opt.schedule_file, "Schedule file (psmoa-schedule/1)");
    cmd->add_option("--algorithm", opt.algorithm, "Algorithm: nsga2, nsga3, psmoa");
    cmd->add_option("--pop-size", opt.pop_size, "Population size (even, >= 4)");
    cmd->add_option("--generations", opt.generations, "Generation budget");
    cmd->add_option("--seed", single_seed, "Single RNG seed");
    cmd->add_option("--seeds", seeds_range, "Seed range A..B (inclusive)");
    cmd->add_option("--out", opt.out_dir, "Output directory")->required();
    cmd->add_option("--format", opt.format, "Result table format")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--time-budget", opt.time_budget_seconds,
                    "Wall-clock budget per run in seconds (scale command)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"policy-aware multi-objective data replication simulator"};
    app.require_subcommand(1);

    psmoa::cli::Options opt;
    std::string seeds_range;
    long long single_seed = -1;

    CLI::App* run = app.add_subcommand("run", "Run one algorithm and emit its front");
    CLI::App* compare =
        app.add_subcommand("compare", "Compare nsga2/nsga3/psmoa over a seed list");
    CLI::App* daycycle =
        app.add_subcommand("daycycle", "24-hour dynamic policy adaptation experiment");
    CLI::App* scale = app.add_subcommand("scale", "Scale study across small/medium/large");
    for (CLI::App* cmd : {run, compare, daycycle, scale})
        add_common_flags(cmd, opt, seeds_range, single_seed);

    std::string command_line;
    for (int i = 0; i < argc; ++i) {
        if (i) command_line += ' ';
        command_line += argv[i];
    }
    opt.command_line = command_line;

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (single_seed >= 0 && !seeds_range.empty())
            throw psmoa::cli::ConfigError("--seed and --seeds are mutually exclusive");
        if (single_seed >= 0) opt.seeds = {static_cast<std::uint64_t>(single_seed)};
        if (!seeds_range.empty()) opt.seeds = parse_seed_range(seeds_range);

        if (run->parsed()) return psmoa::cli::cmd_run(opt);
        if (compare->parsed()) return psmoa::cli::cmd_compare(opt);
        if (daycycle->parsed()) return psmoa::cli::cmd_daycycle(opt);
        if (scale->parsed()) return psmoa::cli::cmd_scale(opt);
        std::cerr << "no subcommand selected\n";
        return 2;
    } catch (const psmoa::cli::ConfigError& e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "runtime failure: " << e.what() << "\n";
        return 1;
    }
}
