// Command-line front end: parses flags into a RunConfig and prints the
// report produced by the library dispatcher.

#include "tncomp/runner.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <string>

namespace {

using tncomp::Command;
using tncomp::OutputFormat;
using tncomp::RunConfig;

void add_common(CLI::App* cmd, RunConfig& cfg, std::string& format) {
    cmd->add_option("--out", cfg.out_path, "write the report to this path instead of stdout");
    cmd->add_option("--format", format, "output format: human, csv or machine")
        ->check(CLI::IsMember({"human", "csv", "machine"}));
    cmd->add_option("--tol", cfg.tol, "verification tolerance");
}

void add_seeding(CLI::App* cmd, RunConfig& cfg, std::uint64_t& seed_value, bool& seed_given) {
    cmd->add_option("--seeds", cfg.seeds, "number of seeded instances (bases 1..seeds)");
    cmd->add_option_function<std::uint64_t>(
           "--seed",
           [&seed_value, &seed_given](const std::uint64_t& v) {
               seed_value = v;
               seed_given = true;
           },
           "base seed for all randomness");
}

OutputFormat parse_format(const std::string& name) {
    if (name == "csv") return OutputFormat::csv;
    if (name == "machine") return OutputFormat::machine;
    return OutputFormat::human;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"memory bounds and exact compression checks for tensor-network state families"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string format = "human";
    std::uint64_t seed_value = 0;
    bool seed_given = false;

    auto* validate = app.add_subcommand("validate", "check a template file against the graph rules");
    validate->add_option("--template", cfg.template_path, "template file")->required();
    add_common(validate, cfg, format);

    auto* mincut = app.add_subcommand("mincut", "min-cut memory bound of a template");
    mincut->add_option("--template", cfg.template_path, "template file")->required();
    add_common(mincut, cfg, format);

    auto* bounds = app.add_subcommand("bounds", "closed-form memory bounds over a parameter grid");
    bounds->add_option("--n", cfg.n_list, "site counts")->delimiter(',');
    bounds->add_option("--m", cfg.m_list, "second grid side lengths")->delimiter(',');
    bounds->add_option("--dp", cfg.dp_list, "physical dimensions")->delimiter(',');
    bounds->add_option("--dc", cfg.dc_list, "bond dimensions")->delimiter(',');
    bounds->add_option("--extra", cfg.extra_bits, "precomputed min-cut bits for the ug_tns row");
    add_common(bounds, cfg, format);

    auto* roundtrip = app.add_subcommand("mps-roundtrip",
                                         "pairwise encode/decode exactness on chains");
    roundtrip->add_option("--mps", cfg.mps_path, "chain file (otherwise random chains)");
    roundtrip->add_option("--n", cfg.n, "sites (random mode)");
    roundtrip->add_option("--dp", cfg.d_p, "physical dimension (random mode)");
    roundtrip->add_option("--dc", cfg.d_c, "bond dimension (random mode)");
    roundtrip->add_option("--pairs", cfg.pairs, "boundary pairs per instance");
    add_seeding(roundtrip, cfg, seed_value, seed_given);
    add_common(roundtrip, cfg, format);

    auto* local = app.add_subcommand("local-compress",
                                     "marginal support isometry on a kept prefix of a chain");
    local->add_option("--mps", cfg.mps_path, "chain file (otherwise random chains)");
    local->add_option("--n", cfg.n, "sites (random mode)");
    local->add_option("--split", cfg.split, "kept prefix length (default n/2)");
    local->add_option("--dp", cfg.d_p, "physical dimension (random mode)");
    local->add_option("--dc", cfg.d_c, "bond dimension (random mode)");
    local->add_option("--pairs", cfg.pairs, "boundary pairs per instance");
    add_seeding(local, cfg, seed_value, seed_given);
    add_common(local, cfg, format);

    auto* gap = app.add_subcommand("gap", "mixing-channel spectral gap of the canonical family");
    gap->add_option("--r", cfg.r, "span dimension")->required();
    add_common(gap, cfg, format);

    auto* gram = app.add_subcommand("gram", "Gram matrix, rank and W factor of a state set");
    gram->add_option("--states", cfg.states_path, "states file")->required();
    add_common(gram, cfg, format);

    auto* rank = app.add_subcommand("rank-vs-cut",
                                    "operator rank against the min-cut bound on random templates");
    rank->add_option("--count", cfg.count, "number of random templates");
    rank->add_flag("--mixed", cfg.mixed_dims, "draw mixed (non power-of-two) edge dimensions");
    add_seeding(rank, cfg, seed_value, seed_given);
    add_common(rank, cfg, format);

    auto* frame = app.add_subcommand("frame",
                                     "frame-operator expansion over a spanning set");
    frame->add_option("--states", cfg.states_path, "spanning set file");
    frame->add_option("--psi", cfg.psi_path, "target state file (one state)");
    frame->add_option("--n", cfg.n, "ambient dimension for the random mode");
    frame->add_option("--count", cfg.count, "number of random sets");
    frame->add_option("--targets", cfg.pairs, "targets per set");
    add_seeding(frame, cfg, seed_value, seed_given);
    add_common(frame, cfg, format);

    auto* cost = app.add_subcommand("emulate-cost", "sample-count scaling estimate");
    cost->add_option("--r", cfg.r, "span dimension")->required();
    cost->add_option("--eps", cfg.eps, "target error in (0,1)")->required();
    double gap_override = 0.0;
    auto* gap_opt = cost->add_option("--gap", gap_override, "spectral gap override");
    add_common(cost, cfg, format);

    CLI11_PARSE(app, argc, argv);

    if (validate->parsed()) cfg.command = Command::validate;
    if (mincut->parsed()) cfg.command = Command::mincut;
    if (bounds->parsed()) cfg.command = Command::bounds;
    if (roundtrip->parsed()) cfg.command = Command::mps_roundtrip;
    if (local->parsed()) cfg.command = Command::local_compress;
    if (gap->parsed()) cfg.command = Command::gap;
    if (gram->parsed()) cfg.command = Command::gram;
    if (rank->parsed()) cfg.command = Command::rank_vs_cut;
    if (frame->parsed()) cfg.command = Command::frame;
    if (cost->parsed()) {
        cfg.command = Command::emulate_cost;
        if (gap_opt->count() > 0) cfg.gap = gap_override;
    }
    if (seed_given) cfg.seed = seed_value;
    cfg.format = parse_format(format);

    const tncomp::RunResult result = tncomp::run(cfg);
    if (cfg.out_path.empty() || result.exit_code == 2) std::cout << result.report;
    return result.exit_code;
}
