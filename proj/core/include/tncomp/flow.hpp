#pragma once

#include "tncomp/bigint.hpp"
#include "tncomp/network.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace tncomp {

struct FlowArc {
    std::size_t from = 0;
    std::size_t to = 0;
    double capacity_bits = 0.0;       // log2 of the originating edge dimension
    std::size_t dim = 1;              // originating template-edge dimension
    std::string template_edge;        // provenance
};

/// Capacitated directed graph derived from a template: parameters enter at
/// the source, physical systems drain into the sink, and every internal
/// template edge contributes two antiparallel arcs of equal capacity.
struct FlowGraph {
    std::vector<std::string> vertex_ids;  // [0]=source, [1]=sink, then filled vertices
    std::vector<FlowArc> arcs;

    static constexpr std::size_t kSource = 0;
    static constexpr std::size_t kSink = 1;

    std::size_t internal_vertex_count() const { return vertex_ids.size() - 2; }
    const std::string& id_of(std::size_t v) const { return vertex_ids[v]; }
};

FlowGraph build_flow_network(const TemplateSpec& tmpl);

/// Max-flow value in bits. Deterministic Edmonds-Karp (BFS augmenting paths)
/// with a 1e-12 positivity threshold on residual capacities.
double max_flow(const FlowGraph& graph);

struct Cut {
    std::vector<std::string> source_side;  // vertex ids, including "s"
    double capacity_bits = 0.0;
    std::vector<FlowArc> cut_edges;
    BigUint cut_dimension = 1;             // exact product of crossing dims
};

/// Minimum cut extracted from the residual graph after max-flow: the source
/// side is the set of vertices reachable from s, which makes the result
/// deterministic and canonical (the cut closest to the source).
Cut min_cut(const FlowGraph& graph);

/// ceil(log2(cut_dimension)) computed on the exact integer product, so that
/// irrational capacities never cause an off-by-one at qubit granularity.
std::size_t memory_qubits(const Cut& cut);

/// Exhaustive minimum over all 2^k source-side subsets; testing oracle.
/// Throws if the graph has more internal vertices than `max_internal_vertices`.
Cut enumerate_cuts(const FlowGraph& graph, std::size_t max_internal_vertices = 20);

struct RankCutReport {
    double min_cut_bits = 0.0;
    std::size_t min_cut_qubits = 0;
    std::vector<std::size_t> ranks;        // one per seed
    double max_rank_bits = 0.0;
    double ratio = 0.0;                    // min_cut_bits / max_rank_bits (0 if degenerate)
    bool uniform_base = false;             // all dims are powers of one integer
    bool rank_below_cut = false;           // log2(rank) <= min-cut + 1e-9 for every seed
    bool ceil_equality_seen = false;       // ceil(log2 rank) == ceil(min-cut) for some seed
    bool log3_bound_holds = false;         // min-cut <= log2(3) * max rank bits + 1e-9
};

/// Compare the min-cut bound with the log-rank of randomly filled instances
/// of the template. Random tensors have i.i.d. complex normal entries drawn
/// from seeds base_seed, base_seed+1, ...
RankCutReport log3_bound_check(const TemplateSpec& tmpl, unsigned seeds,
                               std::uint64_t base_seed = 1,
                               double rel_tol = kDefaultRankTol,
                               const EvalLimits& limits = {});

}  // namespace tncomp
