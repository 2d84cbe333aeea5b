#include "tncomp/flow.hpp"

#include "tncomp/builders.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <stdexcept>

namespace tncomp {

namespace {
constexpr double kEps = 1e-12;
}

FlowGraph build_flow_network(const TemplateSpec& tmpl) {
    auto violations = validate_template(tmpl);
    if (!violations.empty())
        throw std::invalid_argument("invalid template: " + violations.front().where + ": " +
                                    violations.front().message);

    FlowGraph g;
    g.vertex_ids.push_back("s");
    g.vertex_ids.push_back("t");
    std::map<std::string, std::size_t> index;
    for (const auto& v : tmpl.vertices) {
        if (!v.filled) continue;
        index[v.id] = g.vertex_ids.size();
        g.vertex_ids.push_back(v.id);
    }

    for (const auto& e : tmpl.edges) {
        const bool from_filled = tmpl.is_filled(e.from);
        const bool to_filled = tmpl.is_filled(e.to);
        const double bits = std::log2(static_cast<double>(e.dim));
        if (!from_filled && to_filled) {
            g.arcs.push_back({FlowGraph::kSource, index.at(e.to), bits, e.dim, e.id});
        } else if (from_filled && !to_filled) {
            g.arcs.push_back({index.at(e.from), FlowGraph::kSink, bits, e.dim, e.id});
        } else if (from_filled && to_filled) {
            g.arcs.push_back({index.at(e.from), index.at(e.to), bits, e.dim, e.id});
            g.arcs.push_back({index.at(e.to), index.at(e.from), bits, e.dim, e.id});
        }
        // Edges between two empty vertices cannot occur in a valid template.
    }
    return g;
}

namespace {

// Residual network shared by max_flow and min_cut. Each FlowArc becomes a
// forward residual edge plus a zero-capacity reverse partner.
struct Residual {
    struct Edge {
        std::size_t to;
        double cap;
        std::size_t partner;  // index of the reverse edge
    };
    std::vector<std::vector<std::size_t>> adjacency;  // vertex -> edge indices
    std::vector<Edge> edges;

    explicit Residual(const FlowGraph& g) : adjacency(g.vertex_ids.size()) {
        for (const auto& arc : g.arcs) {
            const std::size_t fwd = edges.size();
            edges.push_back({arc.to, arc.capacity_bits, fwd + 1});
            edges.push_back({arc.from, 0.0, fwd});
            adjacency[arc.from].push_back(fwd);
            adjacency[arc.to].push_back(fwd + 1);
        }
    }

    // One BFS augmenting step; returns the pushed amount (0 when done).
    double augment() {
        std::vector<std::size_t> parent_edge(adjacency.size(), SIZE_MAX);
        std::vector<bool> visited(adjacency.size(), false);
        std::deque<std::size_t> queue;
        queue.push_back(FlowGraph::kSource);
        visited[FlowGraph::kSource] = true;
        while (!queue.empty() && !visited[FlowGraph::kSink]) {
            const std::size_t v = queue.front();
            queue.pop_front();
            for (std::size_t ei : adjacency[v]) {
                const Edge& e = edges[ei];
                if (e.cap <= kEps || visited[e.to]) continue;
                visited[e.to] = true;
                parent_edge[e.to] = ei;
                queue.push_back(e.to);
            }
        }
        if (!visited[FlowGraph::kSink]) return 0.0;

        double bottleneck = std::numeric_limits<double>::infinity();
        for (std::size_t v = FlowGraph::kSink; v != FlowGraph::kSource;) {
            const Edge& e = edges[parent_edge[v]];
            bottleneck = std::min(bottleneck, e.cap);
            v = edges[e.partner].to;
        }
        for (std::size_t v = FlowGraph::kSink; v != FlowGraph::kSource;) {
            Edge& e = edges[parent_edge[v]];
            e.cap -= bottleneck;
            edges[e.partner].cap += bottleneck;
            v = edges[e.partner].to;
        }
        return bottleneck;
    }

    double run() {
        double total = 0.0;
        for (;;) {
            const double pushed = augment();
            if (pushed <= 0.0) return total;
            total += pushed;
        }
    }

    std::vector<bool> reachable_from_source() const {
        std::vector<bool> seen(adjacency.size(), false);
        std::deque<std::size_t> queue{FlowGraph::kSource};
        seen[FlowGraph::kSource] = true;
        while (!queue.empty()) {
            const std::size_t v = queue.front();
            queue.pop_front();
            for (std::size_t ei : adjacency[v]) {
                const Edge& e = edges[ei];
                if (e.cap <= kEps || seen[e.to]) continue;
                seen[e.to] = true;
                queue.push_back(e.to);
            }
        }
        return seen;
    }
};

Cut cut_from_side(const FlowGraph& g, const std::vector<bool>& in_source_side) {
    Cut cut;
    for (std::size_t v = 0; v < g.vertex_ids.size(); ++v)
        if (in_source_side[v]) cut.source_side.push_back(g.vertex_ids[v]);
    for (const auto& arc : g.arcs) {
        if (in_source_side[arc.from] && !in_source_side[arc.to]) {
            cut.cut_edges.push_back(arc);
            cut.capacity_bits += arc.capacity_bits;
            cut.cut_dimension *= arc.dim;
        }
    }
    return cut;
}

}  // namespace

double max_flow(const FlowGraph& graph) {
    Residual residual(graph);
    return residual.run();
}

Cut min_cut(const FlowGraph& graph) {
    Residual residual(graph);
    residual.run();
    const std::vector<bool> side = residual.reachable_from_source();
    if (side[FlowGraph::kSink]) throw std::logic_error("sink reachable after max-flow");
    return cut_from_side(graph, side);
}

std::size_t memory_qubits(const Cut& cut) { return cut.cut_dimension.ceil_log2(); }

Cut enumerate_cuts(const FlowGraph& graph, std::size_t max_internal_vertices) {
    const std::size_t k = graph.internal_vertex_count();
    if (k > max_internal_vertices)
        throw std::invalid_argument("too many internal vertices for exhaustive cut enumeration");

    Cut best;
    bool have_best = false;
    for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
        std::vector<bool> side(graph.vertex_ids.size(), false);
        side[FlowGraph::kSource] = true;
        for (std::size_t b = 0; b < k; ++b)
            if (mask & (std::size_t{1} << b)) side[b + 2] = true;
        Cut cut = cut_from_side(graph, side);
        // Exact integer comparison; the float capacity is derived data.
        if (!have_best || cut.cut_dimension < best.cut_dimension) {
            best = std::move(cut);
            have_best = true;
        }
    }
    return best;
}

RankCutReport log3_bound_check(const TemplateSpec& tmpl, unsigned seeds, std::uint64_t base_seed,
                               double rel_tol, const EvalLimits& limits) {
    RankCutReport report;

    const FlowGraph graph = build_flow_network(tmpl);
    const Cut cut = min_cut(graph);
    report.min_cut_bits = cut.capacity_bits;
    report.min_cut_qubits = memory_qubits(cut);

    // Is every dimension a power of one integer base?
    std::vector<std::size_t> dims;
    for (const auto& e : tmpl.edges)
        if (e.dim > 1) dims.push_back(e.dim);
    if (dims.empty()) {
        report.uniform_base = true;
    } else {
        const std::size_t smallest = *std::min_element(dims.begin(), dims.end());
        for (std::size_t base = 2; base <= smallest && !report.uniform_base; ++base) {
            bool all = true;
            for (std::size_t d : dims) {
                std::size_t p = d;
                while (p % base == 0) p /= base;
                if (p != 1) {
                    all = false;
                    break;
                }
            }
            report.uniform_base = all;
        }
    }

    report.rank_below_cut = true;
    std::size_t max_rank = 0;
    for (unsigned s = 0; s < seeds; ++s) {
        const NetworkSpec net = random_assignment(tmpl, base_seed + s);
        const NetworkOperator op = evaluate_operator(net, limits);
        const std::size_t rank = operator_rank(op, rel_tol, limits);
        report.ranks.push_back(rank);
        max_rank = std::max(max_rank, rank);
        const double rank_bits = rank == 0 ? 0.0 : std::log2(static_cast<double>(rank));
        if (rank_bits > report.min_cut_bits + 1e-9) report.rank_below_cut = false;
        const std::size_t rank_qubits = rank == 0 ? 0 : BigUint(rank).ceil_log2();
        if (rank_qubits == report.min_cut_qubits) report.ceil_equality_seen = true;
    }
    report.max_rank_bits = max_rank == 0 ? 0.0 : std::log2(static_cast<double>(max_rank));
    report.ratio = report.max_rank_bits > 0.0 ? report.min_cut_bits / report.max_rank_bits : 0.0;
    report.log3_bound_holds =
        report.min_cut_bits <= std::log2(3.0) * report.max_rank_bits + 1e-9;

    return report;
}

}  // namespace tncomp
