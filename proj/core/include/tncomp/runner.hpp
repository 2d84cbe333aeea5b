#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace tncomp {

enum class Command {
    validate,
    mincut,
    bounds,
    mps_roundtrip,
    local_compress,
    gap,
    gram,
    rank_vs_cut,
    frame,
    emulate_cost,
};

enum class OutputFormat { human, csv, machine };

/// One fully parsed invocation. Commands that draw randomness require an
/// explicit seed specification: either `seed` (base) or a positive `seeds`
/// count enumerating bases 1..seeds; with neither, the run is rejected.
struct RunConfig {
    Command command = Command::validate;
    OutputFormat format = OutputFormat::human;

    std::string template_path;
    std::string mps_path;
    std::string states_path;
    std::string psi_path;
    std::string out_path;  // empty: caller prints the report

    std::uint64_t n = 0;
    std::uint64_t m = 0;
    std::uint64_t d_p = 0;
    std::uint64_t d_c = 0;
    std::uint64_t r = 0;
    std::uint64_t split = 0;        // local-compress: sites kept (prefix)
    std::uint64_t count = 0;        // rank-vs-cut/frame: instances
    unsigned seeds = 0;             // seed bases 1..seeds
    std::optional<std::uint64_t> seed;
    unsigned pairs = 20;            // boundary samples per instance
    double tol = 1e-9;
    double eps = 0.0;
    double extra_bits = 0.0;
    std::optional<double> gap;
    bool mixed_dims = false;        // rank-vs-cut: non-uniform edge pool

    std::vector<std::uint64_t> n_list, m_list, dp_list, dc_list;  // bounds grids
};

struct RunResult {
    int exit_code = 0;      // 0 ok, 1 verification failure, 2 input error
    std::string report;
};

/// Dispatch a command. Identical configs with identical inputs produce
/// byte-identical machine-format reports. Never throws: errors come back as
/// exit code 2 with a one-line message.
RunResult run(const RunConfig& config);

}  // namespace tncomp
