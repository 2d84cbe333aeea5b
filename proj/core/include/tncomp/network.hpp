#pragma once

#include "tncomp/svd.hpp"
#include "tncomp/tensor.hpp"

#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace tncomp {

struct TemplateVertex {
    std::string id;
    bool filled = false;
};

struct TemplateEdge {
    std::string id;
    std::string from;
    std::string to;
    std::size_t dim = 1;
};

/// Oriented graph with edge dimensions and a designated filled-vertex set.
/// Empty vertices mark open (dangling) edges and must be degree-1 pendants
/// attached to a filled vertex.
struct TemplateSpec {
    std::vector<TemplateVertex> vertices;
    std::vector<TemplateEdge> edges;

    const TemplateVertex* find_vertex(const std::string& id) const;
    bool is_filled(const std::string& id) const;

    /// Edges incident on the vertex, in edge-list order.
    std::vector<const TemplateEdge*> incident_edges(const std::string& vertex_id) const;

    /// Open edges: ingoing ones run empty -> filled, outgoing filled -> empty.
    std::vector<const TemplateEdge*> ingoing_open_edges() const;
    std::vector<const TemplateEdge*> outgoing_open_edges() const;
    std::vector<const TemplateEdge*> internal_edges() const;
};

struct Violation {
    std::string where;    // offending vertex or edge id
    std::string message;
};

/// Empty result iff the template is well formed. Violations are data, not
/// errors: loading malformed input reports every problem at once.
std::vector<Violation> validate_template(const TemplateSpec& tmpl);

struct VertexAssignment {
    Tensor tensor;
    std::vector<std::string> edge_order;  // incident edge ids, one per leg
};

struct NetworkSpec {
    TemplateSpec tmpl;
    std::map<std::string, VertexAssignment> assignment;  // filled vertex id -> tensor
};

std::vector<Violation> validate_network(const NetworkSpec& net);

/// Explicit matrix of the operator a network contracts to, from the tensor
/// product of ingoing-edge spaces to the tensor product of outgoing-edge
/// spaces. Edge order inside each product is canonical: sorted by
/// (attached filled vertex id, edge id).
struct NetworkOperator {
    Tensor matrix;  // (prod out dims) x (prod in dims)
    std::vector<std::string> out_edge_order;
    std::vector<std::string> in_edge_order;
    std::vector<std::size_t> out_dims;
    std::vector<std::size_t> in_dims;
};

/// Feasibility guardrails for dense evaluation. These are configuration, not
/// constants: the objects are exponentially large in general and the caller
/// decides where the desk-scale boundary sits.
struct EvalLimits {
    std::size_t max_total_dim = std::size_t{1} << 22;
    std::size_t max_svd_extent = 4096;
};

/// Contract the network to an explicit matrix. The contraction order is a
/// deterministic greedy heuristic (merge the pair with the smallest
/// intermediate, ties by lexicographic vertex id); the result is
/// order-independent.
NetworkOperator evaluate_operator(const NetworkSpec& net, const EvalLimits& limits = {});

std::size_t operator_rank(const NetworkOperator& op, double rel_tol = kDefaultRankTol,
                          const EvalLimits& limits = {});

/// Same graph with every edge dimension lowered to the largest power of two
/// below it. Idempotent; never increases a dimension.
TemplateSpec restrict_power_of_two(const TemplateSpec& tmpl);

}  // namespace tncomp
