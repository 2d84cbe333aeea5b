#include "tncomp/builders.hpp"

#include "tncomp/mps.hpp"
#include "tncomp/rng.hpp"

#include <algorithm>
#include <stdexcept>

namespace tncomp {

TemplateSpec mps_boundary_template(std::size_t n, std::size_t d_p, std::size_t d_c) {
    if (n < 1) throw std::invalid_argument("chain needs at least one site");
    TemplateSpec t;
    auto site = [](std::size_t k) { return "A" + std::to_string(k + 1); };

    for (std::size_t k = 0; k < n; ++k) t.vertices.push_back({site(k), true});
    t.vertices.push_back({"L", false});
    t.vertices.push_back({"R", false});
    for (std::size_t k = 0; k < n; ++k) t.vertices.push_back({"P" + std::to_string(k + 1), false});

    t.edges.push_back({"bL", "L", site(0), d_c});
    for (std::size_t k = 0; k + 1 < n; ++k)
        t.edges.push_back({"b" + std::to_string(k + 1), site(k + 1), site(k), d_c});
    t.edges.push_back({"bR", "R", site(n - 1), d_c});
    for (std::size_t k = 0; k < n; ++k)
        t.edges.push_back({"p" + std::to_string(k + 1), site(k), "P" + std::to_string(k + 1), d_p});
    return t;
}

TemplateSpec peps_boundary_template(std::size_t rows, std::size_t cols, std::size_t d_p,
                                    std::size_t d_c) {
    if (rows < 1 || cols < 1) throw std::invalid_argument("grid needs at least one site");
    TemplateSpec t;
    auto site = [cols](std::size_t r, std::size_t c) {
        return "A" + std::to_string(r + 1) + "_" + std::to_string(c + 1);
    };

    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) t.vertices.push_back({site(r, c), true});

    std::size_t boundary_count = 0;
    auto add_boundary = [&](const std::string& to) {
        const std::string empty = "B" + std::to_string(++boundary_count);
        t.vertices.push_back({empty, false});
        t.edges.push_back({"g" + std::to_string(boundary_count), empty, to, d_c});
    };

    // Rim bonds, walked row-major so the construction is deterministic.
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
            if (r == 0) add_boundary(site(r, c));           // up
            if (r + 1 == rows) add_boundary(site(r, c));    // down
            if (c == 0) add_boundary(site(r, c));           // left
            if (c + 1 == cols) add_boundary(site(r, c));    // right
        }
    }

    std::size_t bond_count = 0;
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
            if (c + 1 < cols)
                t.edges.push_back(
                    {"h" + std::to_string(++bond_count), site(r, c), site(r, c + 1), d_c});
            if (r + 1 < rows)
                t.edges.push_back(
                    {"v" + std::to_string(++bond_count), site(r, c), site(r + 1, c), d_c});
        }
    }

    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
            const std::string empty = "P" + std::to_string(r + 1) + "_" + std::to_string(c + 1);
            t.vertices.push_back({empty, false});
            t.edges.push_back(
                {"p" + std::to_string(r + 1) + "_" + std::to_string(c + 1), site(r, c), empty, d_p});
        }
    }
    return t;
}

NetworkSpec mps_boundary_network(const Mps& mps) {
    const std::size_t n = mps.sites.size();
    if (n == 0) throw std::invalid_argument("empty chain");
    const std::size_t d_c = mps.sites.front().shape()[1];
    for (const Tensor& site : mps.sites)
        if (site.shape()[1] != d_c || site.shape()[2] != d_c)
            throw std::invalid_argument("chain template requires uniform bond dimension");
    const std::size_t d_p = mps.sites.front().shape()[0];
    for (const Tensor& site : mps.sites)
        if (site.shape()[0] != d_p)
            throw std::invalid_argument("chain template requires uniform physical dimension");

    NetworkSpec net;
    net.tmpl = mps_boundary_template(n, d_p, d_c);
    for (std::size_t k = 0; k < n; ++k) {
        VertexAssignment a;
        a.tensor = mps.sites[k];
        // Site legs are (physical, left bond, right bond).
        const std::string left = k == 0 ? "bL" : "b" + std::to_string(k);
        const std::string right = k + 1 == n ? "bR" : "b" + std::to_string(k + 1);
        a.edge_order = {"p" + std::to_string(k + 1), left, right};
        net.assignment["A" + std::to_string(k + 1)] = std::move(a);
    }
    return net;
}

TemplateSpec random_template(std::uint64_t seed, const RandomTemplateOptions& options) {
    RandomStream rng(seed);
    const std::size_t k = static_cast<std::size_t>(rng.integer(2, options.max_filled));

    const std::vector<std::size_t> pool = options.power_of_two_dims
                                              ? std::vector<std::size_t>{1, 2, 2, 4, 4, 8}
                                              : std::vector<std::size_t>{2, 3, 3, 5, 6, 7};
    auto pick_dim = [&] { return pool[rng.integer(0, pool.size() - 1)]; };

    TemplateSpec t;
    for (std::size_t v = 0; v < k; ++v)
        t.vertices.push_back({"V" + std::to_string(v), true});

    std::size_t edge_count = 0;
    auto edge_id = [&edge_count] { return "e" + std::to_string(edge_count++); };

    // Per-vertex tensor entry budget; an added edge shrinks until both of
    // its endpoints stay within it, which also bounds the contraction
    // intermediates.
    constexpr std::size_t kVertexBudget = 1024;
    std::vector<std::size_t> vertex_size(k, 1);
    auto fit_dim = [&vertex_size](std::size_t dim, std::size_t u, std::size_t v) {
        while (dim > 1 &&
               (vertex_size[u] * dim > kVertexBudget || vertex_size[v] * dim > kVertexBudget))
            dim = dim / 2 + (dim & 1);
        vertex_size[u] *= dim;
        if (v != u) vertex_size[v] *= dim;
        return dim;
    };

    // Random spanning tree keeps the core connected; extra forward edges add
    // cycles while preserving orientation (at most one direction per pair).
    std::vector<std::vector<bool>> linked(k, std::vector<bool>(k, false));
    for (std::size_t v = 1; v < k; ++v) {
        const std::size_t u = static_cast<std::size_t>(rng.integer(0, v - 1));
        const bool forward = rng.integer(0, 1) == 1;
        const std::size_t dim = fit_dim(pick_dim(), u, v);
        t.edges.push_back({edge_id(), "V" + std::to_string(forward ? u : v),
                           "V" + std::to_string(forward ? v : u), dim});
        linked[u][v] = linked[v][u] = true;
    }
    for (std::size_t u = 0; u < k; ++u) {
        for (std::size_t v = u + 1; v < k; ++v) {
            if (linked[u][v] || rng.integer(0, 2) != 0) continue;
            const bool forward = rng.integer(0, 1) == 1;
            const std::size_t dim = fit_dim(pick_dim(), u, v);
            t.edges.push_back({edge_id(), "V" + std::to_string(forward ? u : v),
                               "V" + std::to_string(forward ? v : u), dim});
            linked[u][v] = linked[v][u] = true;
        }
    }

    // Open edges: at least one input and one output overall, with the
    // product of dimensions on each side capped.
    std::size_t empty_count = 0;
    std::size_t in_product = 1, out_product = 1;
    auto add_open = [&](std::size_t vertex, bool ingoing) {
        std::size_t dim = pick_dim();
        std::size_t& product = ingoing ? in_product : out_product;
        while (dim > 1 && product * dim > options.max_side_dim) dim = dim / 2 + (dim & 1);
        dim = fit_dim(dim, vertex, vertex);
        if (product * dim > options.max_side_dim) return;
        product *= dim;
        const std::string empty = "open" + std::to_string(empty_count++);
        t.vertices.push_back({empty, false});
        if (ingoing)
            t.edges.push_back({edge_id(), empty, "V" + std::to_string(vertex), dim});
        else
            t.edges.push_back({edge_id(), "V" + std::to_string(vertex), empty, dim});
    };

    add_open(static_cast<std::size_t>(rng.integer(0, k - 1)), true);
    add_open(static_cast<std::size_t>(rng.integer(0, k - 1)), false);
    const std::size_t extra = static_cast<std::size_t>(rng.integer(0, 2 * k));
    for (std::size_t i = 0; i < extra; ++i)
        add_open(static_cast<std::size_t>(rng.integer(0, k - 1)), rng.integer(0, 1) == 1);

    return t;
}

NetworkSpec random_assignment(const TemplateSpec& tmpl, std::uint64_t seed) {
    RandomStream rng(seed);
    NetworkSpec net;
    net.tmpl = tmpl;
    for (const auto& v : tmpl.vertices) {
        if (!v.filled) continue;
        VertexAssignment a;
        std::vector<std::size_t> shape;
        for (const TemplateEdge* e : tmpl.incident_edges(v.id)) {
            a.edge_order.push_back(e->id);
            shape.push_back(e->dim);
        }
        a.tensor = rng.tensor(shape);
        net.assignment[v.id] = std::move(a);
    }
    return net;
}

}  // namespace tncomp
