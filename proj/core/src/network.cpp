#include "tncomp/network.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace tncomp {

const TemplateVertex* TemplateSpec::find_vertex(const std::string& id) const {
    for (const auto& v : vertices)
        if (v.id == id) return &v;
    return nullptr;
}

bool TemplateSpec::is_filled(const std::string& id) const {
    const TemplateVertex* v = find_vertex(id);
    return v != nullptr && v->filled;
}

std::vector<const TemplateEdge*> TemplateSpec::incident_edges(const std::string& vertex_id) const {
    std::vector<const TemplateEdge*> out;
    for (const auto& e : edges)
        if (e.from == vertex_id || e.to == vertex_id) out.push_back(&e);
    return out;
}

std::vector<const TemplateEdge*> TemplateSpec::ingoing_open_edges() const {
    std::vector<const TemplateEdge*> out;
    for (const auto& e : edges)
        if (!is_filled(e.from) && is_filled(e.to)) out.push_back(&e);
    return out;
}

std::vector<const TemplateEdge*> TemplateSpec::outgoing_open_edges() const {
    std::vector<const TemplateEdge*> out;
    for (const auto& e : edges)
        if (is_filled(e.from) && !is_filled(e.to)) out.push_back(&e);
    return out;
}

std::vector<const TemplateEdge*> TemplateSpec::internal_edges() const {
    std::vector<const TemplateEdge*> out;
    for (const auto& e : edges)
        if (is_filled(e.from) && is_filled(e.to)) out.push_back(&e);
    return out;
}

std::vector<Violation> validate_template(const TemplateSpec& tmpl) {
    std::vector<Violation> out;

    std::set<std::string> ids;
    for (const auto& v : tmpl.vertices) {
        if (!ids.insert(v.id).second)
            out.push_back({v.id, "duplicate vertex id"});
    }

    std::set<std::string> edge_ids;
    std::set<std::pair<std::string, std::string>> ordered_pairs;
    for (const auto& e : tmpl.edges) {
        if (!edge_ids.insert(e.id).second) out.push_back({e.id, "duplicate edge id"});
        if (ids.count(e.from) == 0) out.push_back({e.id, "edge endpoint '" + e.from + "' is not a vertex"});
        if (ids.count(e.to) == 0) out.push_back({e.id, "edge endpoint '" + e.to + "' is not a vertex"});
        if (e.from == e.to) out.push_back({e.id, "self-loop edges are not allowed"});
        if (e.dim < 1) out.push_back({e.id, "edge dimension must be >= 1"});
        if (ordered_pairs.count({e.to, e.from}) > 0)
            out.push_back({e.id, "both orientations present between '" + e.from + "' and '" + e.to + "'"});
        if (!ordered_pairs.insert({e.from, e.to}).second)
            out.push_back({e.id, "parallel edge between '" + e.from + "' and '" + e.to + "'"});
    }

    for (const auto& v : tmpl.vertices) {
        if (v.filled) continue;
        // Every empty vertex must be a pendant attached to one filled vertex.
        std::size_t degree = 0;
        bool neighbor_filled = true;
        for (const auto& e : tmpl.edges) {
            if (e.from == v.id) {
                ++degree;
                neighbor_filled = neighbor_filled && tmpl.is_filled(e.to);
            } else if (e.to == v.id) {
                ++degree;
                neighbor_filled = neighbor_filled && tmpl.is_filled(e.from);
            }
        }
        if (degree != 1)
            out.push_back({v.id, "empty vertex must have degree 1, has " + std::to_string(degree)});
        else if (!neighbor_filled)
            out.push_back({v.id, "empty vertex must attach to a filled vertex"});
    }

    return out;
}

std::vector<Violation> validate_network(const NetworkSpec& net) {
    std::vector<Violation> out = validate_template(net.tmpl);

    for (const auto& v : net.tmpl.vertices) {
        if (!v.filled) continue;
        auto it = net.assignment.find(v.id);
        if (it == net.assignment.end()) {
            out.push_back({v.id, "filled vertex has no tensor"});
            continue;
        }
        const VertexAssignment& a = it->second;
        auto incident = net.tmpl.incident_edges(v.id);
        if (a.edge_order.size() != incident.size()) {
            out.push_back({v.id, "edge_order size does not match vertex degree"});
            continue;
        }
        std::set<std::string> incident_ids;
        for (const auto* e : incident) incident_ids.insert(e->id);
        std::set<std::string> order_ids(a.edge_order.begin(), a.edge_order.end());
        if (incident_ids != order_ids) {
            out.push_back({v.id, "edge_order does not list the incident edges"});
            continue;
        }
        if (a.tensor.order() != incident.size()) {
            out.push_back({v.id, "tensor order does not match vertex degree"});
            continue;
        }
        for (std::size_t k = 0; k < a.edge_order.size(); ++k) {
            const auto* edge = *std::find_if(incident.begin(), incident.end(),
                                             [&](const TemplateEdge* e) { return e->id == a.edge_order[k]; });
            if (a.tensor.shape()[k] != edge->dim)
                out.push_back({v.id, "leg " + std::to_string(k) + " extent does not match edge '" +
                                          edge->id + "' dimension"});
        }
    }

    for (const auto& [id, a] : net.assignment) {
        (void)a;
        if (!net.tmpl.is_filled(id)) out.push_back({id, "tensor assigned to a non-filled vertex"});
    }

    return out;
}

namespace {

struct Node {
    std::string id;                     // lexicographically smallest member vertex
    Tensor tensor;
    std::vector<std::string> leg_edges;  // edge id per leg
};

// Merge two nodes, contracting every edge they share.
Node merge_nodes(const Node& a, const Node& b) {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < a.leg_edges.size(); ++i)
        for (std::size_t j = 0; j < b.leg_edges.size(); ++j)
            if (a.leg_edges[i] == b.leg_edges[j]) pairs.emplace_back(i, j);

    Node out;
    out.id = std::min(a.id, b.id);
    out.tensor = contract_pair(a.tensor, b.tensor, pairs);

    std::set<std::size_t> a_paired, b_paired;
    for (const auto& [i, j] : pairs) {
        a_paired.insert(i);
        b_paired.insert(j);
    }
    for (std::size_t i = 0; i < a.leg_edges.size(); ++i)
        if (a_paired.count(i) == 0) out.leg_edges.push_back(a.leg_edges[i]);
    for (std::size_t j = 0; j < b.leg_edges.size(); ++j)
        if (b_paired.count(j) == 0) out.leg_edges.push_back(b.leg_edges[j]);
    return out;
}

std::size_t merged_size(const Node& a, const Node& b) {
    std::set<std::string> shared;
    for (const auto& ea : a.leg_edges)
        for (const auto& eb : b.leg_edges)
            if (ea == eb) shared.insert(ea);
    std::size_t total = 1;
    auto count_free = [&shared, &total](const Node& n) {
        for (std::size_t k = 0; k < n.leg_edges.size(); ++k)
            if (shared.count(n.leg_edges[k]) == 0) total *= n.tensor.shape()[k];
    };
    count_free(a);
    count_free(b);
    return total;
}

}  // namespace

NetworkOperator evaluate_operator(const NetworkSpec& net, const EvalLimits& limits) {
    auto violations = validate_network(net);
    if (!violations.empty())
        throw std::invalid_argument("invalid network: " + violations.front().where + ": " +
                                    violations.front().message);

    // Canonical open-edge orders: sorted by (attached filled vertex, edge id).
    auto canonical = [&](std::vector<const TemplateEdge*> open_edges, bool ingoing) {
        std::sort(open_edges.begin(), open_edges.end(),
                  [&](const TemplateEdge* a, const TemplateEdge* b) {
                      const std::string& va = ingoing ? a->to : a->from;
                      const std::string& vb = ingoing ? b->to : b->from;
                      return std::tie(va, a->id) < std::tie(vb, b->id);
                  });
        return open_edges;
    };
    const auto in_edges = canonical(net.tmpl.ingoing_open_edges(), true);
    const auto out_edges = canonical(net.tmpl.outgoing_open_edges(), false);

    std::size_t total = 1;
    for (const auto* e : in_edges) total *= e->dim;
    for (const auto* e : out_edges) total *= e->dim;
    if (total > limits.max_total_dim)
        throw std::invalid_argument("operator dimension " + std::to_string(total) +
                                    " exceeds the configured limit " +
                                    std::to_string(limits.max_total_dim));

    std::vector<Node> nodes;
    for (const auto& v : net.tmpl.vertices) {
        if (!v.filled) continue;
        const VertexAssignment& a = net.assignment.at(v.id);
        nodes.push_back({v.id, a.tensor, a.edge_order});
    }
    if (nodes.empty()) throw std::invalid_argument("network has no filled vertices");

    // Greedy pairwise contraction over connected pairs; disconnected
    // remainders are merged as outer products at the end.
    while (nodes.size() > 1) {
        std::size_t best_i = 0, best_j = 1;
        std::size_t best_size = SIZE_MAX;
        bool found = false;
        for (std::size_t i = 0; i < nodes.size(); ++i) {
            for (std::size_t j = i + 1; j < nodes.size(); ++j) {
                bool connected = false;
                for (const auto& ea : nodes[i].leg_edges) {
                    for (const auto& eb : nodes[j].leg_edges)
                        if (ea == eb) {
                            connected = true;
                            break;
                        }
                    if (connected) break;
                }
                if (!connected) continue;
                const std::size_t size = merged_size(nodes[i], nodes[j]);
                auto key = std::tie(nodes[i].id, nodes[j].id);
                if (!found || size < best_size ||
                    (size == best_size && key < std::tie(nodes[best_i].id, nodes[best_j].id))) {
                    found = true;
                    best_size = size;
                    best_i = i;
                    best_j = j;
                }
            }
        }
        if (!found) {
            // No connected pair left: outer product of the two smallest ids.
            std::vector<std::size_t> order(nodes.size());
            for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
            std::sort(order.begin(), order.end(),
                      [&](std::size_t a, std::size_t b) { return nodes[a].id < nodes[b].id; });
            best_i = std::min(order[0], order[1]);
            best_j = std::max(order[0], order[1]);
        }
        Node merged = merge_nodes(nodes[best_i], nodes[best_j]);
        nodes.erase(nodes.begin() + static_cast<std::ptrdiff_t>(best_j));
        nodes[best_i] = std::move(merged);
    }

    Node& final_node = nodes.front();

    // Permute the remaining legs to (out..., in...) canonical order.
    std::vector<std::size_t> perm;
    auto leg_of_edge = [&](const std::string& edge_id) {
        for (std::size_t k = 0; k < final_node.leg_edges.size(); ++k)
            if (final_node.leg_edges[k] == edge_id) return k;
        throw std::logic_error("open edge missing from contracted tensor");
    };
    for (const auto* e : out_edges) perm.push_back(leg_of_edge(e->id));
    for (const auto* e : in_edges) perm.push_back(leg_of_edge(e->id));
    Tensor arranged = final_node.tensor.order() == 0 ? final_node.tensor
                                                     : permute(final_node.tensor, perm);

    NetworkOperator op;
    std::size_t out_total = 1, in_total = 1;
    for (const auto* e : out_edges) {
        op.out_edge_order.push_back(e->id);
        op.out_dims.push_back(e->dim);
        out_total *= e->dim;
    }
    for (const auto* e : in_edges) {
        op.in_edge_order.push_back(e->id);
        op.in_dims.push_back(e->dim);
        in_total *= e->dim;
    }
    op.matrix = reshape(arranged, {out_total, in_total});
    return op;
}

std::size_t operator_rank(const NetworkOperator& op, double rel_tol, const EvalLimits& limits) {
    const std::size_t rows = op.matrix.shape()[0], cols = op.matrix.shape()[1];
    if (rows > limits.max_svd_extent || cols > limits.max_svd_extent)
        throw std::invalid_argument("operator extent exceeds the configured SVD limit");
    return svd_support(op.matrix, rel_tol).numerical_rank;
}

TemplateSpec restrict_power_of_two(const TemplateSpec& tmpl) {
    TemplateSpec out = tmpl;
    for (auto& e : out.edges) {
        std::size_t p = 1;
        while (p * 2 <= e.dim) p *= 2;
        e.dim = p;
    }
    return out;
}

}  // namespace tncomp
