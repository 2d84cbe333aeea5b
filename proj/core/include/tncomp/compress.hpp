#pragma once

#include "tncomp/mps.hpp"
#include "tncomp/network.hpp"
#include "tncomp/svd.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace tncomp {

/// Linear map V with orthonormal rows (V V^dag = I on the out space); V^dag V
/// projects onto the support subspace the map encodes.
struct PartialIsometry {
    Tensor matrix;                     // out_dim x (prod in_dims)
    std::vector<std::size_t> in_dims;  // factor extents of the input space
    std::size_t out_dim = 0;
    std::size_t support_rank = 0;
};

/// Encoder for the pair of adjacent sites (i, i+1): the isometry onto the
/// column space of the pair's two-site map from (left bond x right bond) to
/// (phys_i x phys_{i+1}). Its projector fixes every state of the
/// variable-boundary family on those sites.
PartialIsometry pair_isometry(const Mps& mps, std::size_t i, double rel_tol = kDefaultRankTol);

struct EncodingGate {
    std::size_t site_begin = 0;  // original-site range [site_begin, site_end)
    std::size_t site_end = 0;
    PartialIsometry iso;
};

/// Balanced pairwise-encoding circuit: each layer merges adjacent blocks in
/// parallel (a trailing odd block passes through and pairs in the next
/// layer), giving depth ceil(log2 n) and n-1 gates in total.
struct EncodingCircuit {
    std::vector<std::vector<EncodingGate>> layers;
    std::vector<std::size_t> input_dims;  // per original site
    std::size_t memory_dim = 0;           // output dimension of the last gate
};

EncodingCircuit build_encoding_circuit(const Mps& mps, double rel_tol = kDefaultRankTol);

/// Apply the circuit layers to a full state (flat vector or order-n tensor
/// over the input dims). The result is a vector of extent memory_dim.
Tensor encode(const Tensor& state, const EncodingCircuit& circuit);

/// Adjoint layers in reverse order; exact inverse of encode on the family
/// span, a projection onto it elsewhere.
Tensor decode(const Tensor& memory, const EncodingCircuit& circuit);

/// Support isometry for a marginal: rows of the matricised network operator
/// are restricted to the chosen physical out-edges, columns run over the
/// parameter inputs and the remaining (environment) out-edges. The returned
/// V satisfies (V^dag V (x) I_env) Psi = Psi for every state of the family.
PartialIsometry local_support_isometry(const NetworkSpec& net,
                                       const std::vector<std::string>& physical_edges,
                                       double rel_tol = kDefaultRankTol,
                                       const EvalLimits& limits = {});

}  // namespace tncomp
