#include "tncomp/compress.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace tncomp {

namespace {

// Two-site map M[(p1 p2), (a b)] = sum_m A_{p1,a,m} B_{p2,m,b}.
Tensor two_site_map(const Tensor& left_site, const Tensor& right_site) {
    // Legs after contraction over the shared bond: (p1, a, p2, b).
    Tensor merged = contract_pair(left_site, right_site, {{2, 1}});
    return matricize(merged, {0, 2}, {1, 3});
}

PartialIsometry isometry_from_columns(const Tensor& map, std::vector<std::size_t> in_dims,
                                      double rel_tol) {
    const SvdResult svd = svd_support(map, rel_tol);
    if (svd.numerical_rank == 0)
        throw std::invalid_argument("zero map has no support isometry");

    const std::size_t rows = map.shape()[0];
    PartialIsometry v;
    v.support_rank = svd.numerical_rank;
    v.out_dim = svd.numerical_rank;
    v.in_dims = std::move(in_dims);
    // V = U_r^dag: rows orthonormal, V V^dag = I_r.
    Tensor m({v.out_dim, rows});
    for (std::size_t q = 0; q < v.out_dim; ++q)
        for (std::size_t p = 0; p < rows; ++p) m.at(q, p) = std::conj(svd.u.at(p, q));
    v.matrix = std::move(m);
    return v;
}

}  // namespace

PartialIsometry pair_isometry(const Mps& mps, std::size_t i, double rel_tol) {
    mps.validate();
    if (i + 1 >= mps.n()) throw std::out_of_range("site index out of range for a pair");
    const Tensor map = two_site_map(mps.sites[i], mps.sites[i + 1]);
    return isometry_from_columns(map, {mps.phys_dim(i), mps.phys_dim(i + 1)}, rel_tol);
}

EncodingCircuit build_encoding_circuit(const Mps& mps, double rel_tol) {
    mps.validate();

    EncodingCircuit circuit;
    for (std::size_t k = 0; k < mps.n(); ++k) circuit.input_dims.push_back(mps.phys_dim(k));

    // Current chain, re-expressed as an MPS after every layer so that each
    // isometry is computed from two site tensors, never from the full state.
    struct Block {
        Tensor site;             // legs (block dim, left bond, right bond)
        std::size_t orig_begin;
        std::size_t orig_end;
    };
    std::vector<Block> blocks;
    for (std::size_t k = 0; k < mps.n(); ++k) blocks.push_back({mps.sites[k], k, k + 1});

    while (blocks.size() > 1) {
        std::vector<EncodingGate> layer;
        std::vector<Block> next;
        for (std::size_t j = 0; j + 1 < blocks.size(); j += 2) {
            const Block& a = blocks[j];
            const Block& b = blocks[j + 1];
            const Tensor map = two_site_map(a.site, b.site);
            PartialIsometry v = isometry_from_columns(
                map, {a.site.shape()[0], b.site.shape()[0]}, rel_tol);

            // Recombined site: apply V to the merged pair, keeping the outer
            // bonds. V M has rows q and columns (left bond, right bond).
            const Tensor vm = contract_pair(v.matrix, map, {{1, 0}});
            Tensor site = dematricize(vm, {v.out_dim, a.site.shape()[1], b.site.shape()[2]},
                                      {0}, {1, 2});
            next.push_back({std::move(site), a.orig_begin, b.orig_end});
            layer.push_back({a.orig_begin, b.orig_end, std::move(v)});
        }
        if (blocks.size() % 2 == 1) next.push_back(blocks.back());
        circuit.layers.push_back(std::move(layer));
        blocks = std::move(next);
    }

    circuit.memory_dim = blocks.front().site.shape()[0];
    return circuit;
}

namespace {

// Contract one gate over blocks (j, j+1) of the running state.
Tensor apply_gate(const Tensor& state, std::size_t j, const Tensor& gate_matrix,
                  std::size_t d1, std::size_t d2, std::size_t out_dim, bool adjoint) {
    std::size_t pre = 1, post = 1;
    for (std::size_t k = 0; k < j; ++k) pre *= state.shape()[k];
    for (std::size_t k = j + (adjoint ? 1 : 2); k < state.order(); ++k) post *= state.shape()[k];

    std::vector<std::size_t> out_shape;
    for (std::size_t k = 0; k < j; ++k) out_shape.push_back(state.shape()[k]);
    if (adjoint) {
        out_shape.push_back(d1);
        out_shape.push_back(d2);
    } else {
        out_shape.push_back(out_dim);
    }
    for (std::size_t k = j + (adjoint ? 1 : 2); k < state.order(); ++k)
        out_shape.push_back(state.shape()[k]);
    Tensor out(out_shape);

    const std::size_t in_pair = d1 * d2;
    if (!adjoint) {
        for (std::size_t p = 0; p < pre; ++p)
            for (std::size_t q = 0; q < out_dim; ++q)
                for (std::size_t x = 0; x < in_pair; ++x) {
                    const Complex w = gate_matrix[q * in_pair + x];
                    if (w == Complex(0.0)) continue;
                    const std::size_t src = (p * in_pair + x) * post;
                    const std::size_t dst = (p * out_dim + q) * post;
                    for (std::size_t s = 0; s < post; ++s) out[dst + s] += w * state[src + s];
                }
    } else {
        for (std::size_t p = 0; p < pre; ++p)
            for (std::size_t q = 0; q < out_dim; ++q)
                for (std::size_t x = 0; x < in_pair; ++x) {
                    const Complex w = std::conj(gate_matrix[q * in_pair + x]);
                    if (w == Complex(0.0)) continue;
                    const std::size_t src = (p * out_dim + q) * post;
                    const std::size_t dst = (p * in_pair + x) * post;
                    for (std::size_t s = 0; s < post; ++s) out[dst + s] += w * state[src + s];
                }
    }
    return out;
}

std::size_t product(const std::vector<std::size_t>& dims) {
    std::size_t p = 1;
    for (std::size_t d : dims) p *= d;
    return p;
}

}  // namespace

Tensor encode(const Tensor& state, const EncodingCircuit& circuit) {
    if (state.size() != product(circuit.input_dims))
        throw std::invalid_argument("state extent does not match the circuit input");

    Tensor current = reshape(state, circuit.input_dims);
    for (const auto& layer : circuit.layers) {
        std::size_t j = 0;
        for (const auto& gate : layer) {
            current = apply_gate(current, j, gate.iso.matrix, gate.iso.in_dims[0],
                                 gate.iso.in_dims[1], gate.iso.out_dim, false);
            ++j;  // the pair at (j, j+1) collapsed into slot j
        }
    }
    return reshape(current, {circuit.memory_dim});
}

Tensor decode(const Tensor& memory, const EncodingCircuit& circuit) {
    if (memory.size() != circuit.memory_dim)
        throw std::invalid_argument("memory extent does not match the circuit output");

    Tensor current = reshape(memory, {circuit.memory_dim});
    for (std::size_t li = circuit.layers.size(); li-- > 0;) {
        // Undo gates left to right; each expands slot j back into a pair, so
        // the next gate's slot moves two places right.
        std::size_t j = 0;
        for (const auto& gate : circuit.layers[li]) {
            current = apply_gate(current, j, gate.iso.matrix, gate.iso.in_dims[0],
                                 gate.iso.in_dims[1], gate.iso.out_dim, true);
            j += 2;
        }
    }
    return reshape(current, {product(circuit.input_dims)});
}

PartialIsometry local_support_isometry(const NetworkSpec& net,
                                       const std::vector<std::string>& physical_edges,
                                       double rel_tol, const EvalLimits& limits) {
    const NetworkOperator op = evaluate_operator(net, limits);

    std::set<std::string> phys(physical_edges.begin(), physical_edges.end());
    for (const auto& id : physical_edges)
        if (std::find(op.out_edge_order.begin(), op.out_edge_order.end(), id) ==
            op.out_edge_order.end())
            throw std::invalid_argument("'" + id + "' is not an outgoing open edge");

    // Tensor legs: out edges then in edges, in canonical order.
    std::vector<std::size_t> shape = op.out_dims;
    shape.insert(shape.end(), op.in_dims.begin(), op.in_dims.end());
    const Tensor full = reshape(op.matrix, shape);

    std::vector<std::size_t> row_legs, col_legs, in_dims;
    for (std::size_t k = 0; k < op.out_edge_order.size(); ++k) {
        if (phys.count(op.out_edge_order[k]) > 0) {
            row_legs.push_back(k);
            in_dims.push_back(op.out_dims[k]);
        } else {
            col_legs.push_back(k);
        }
    }
    for (std::size_t k = 0; k < op.in_dims.size(); ++k)
        col_legs.push_back(op.out_edge_order.size() + k);

    const Tensor marginal_map = matricize(full, row_legs, col_legs);
    if (marginal_map.shape()[0] > limits.max_svd_extent ||
        marginal_map.shape()[1] > limits.max_svd_extent)
        throw std::invalid_argument("marginal map extent exceeds the configured SVD limit");
    return isometry_from_columns(marginal_map, std::move(in_dims), rel_tol);
}

}  // namespace tncomp
