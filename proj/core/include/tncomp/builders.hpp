#pragma once

#include "tncomp/network.hpp"

#include <cstdint>
#include <optional>

namespace tncomp {

struct Mps;

/// Chain template for the family with variable boundary conditions: n filled
/// sites, two ingoing bond edges of dimension d_c at the ends, one outgoing
/// physical edge of dimension d_p per site. Vertex ids are A1..An; edge ids
/// are bL, bR, b1..b{n-1} (bonds) and p1..pn (physical).
TemplateSpec mps_boundary_template(std::size_t n, std::size_t d_p, std::size_t d_c);

/// rows x cols grid with variable boundary: every missing neighbour of a rim
/// site becomes an ingoing bond edge of dimension d_c; each site emits one
/// physical edge of dimension d_p.
TemplateSpec peps_boundary_template(std::size_t rows, std::size_t cols, std::size_t d_p,
                                    std::size_t d_c);

/// Assign the site tensors of an MPS to the chain template, giving the
/// network whose operator maps (left bond x right bond) to the physical
/// systems. The MPS boundary is ignored; bond extents must be uniform.
NetworkSpec mps_boundary_network(const Mps& mps);

struct RandomTemplateOptions {
    std::size_t max_filled = 5;
    bool power_of_two_dims = true;     // dims from {1,2,4,8}; otherwise {2,3,5,6,7}
    std::size_t max_side_dim = 256;    // cap on both the in and the out product
};

/// Random valid template: a connected oriented core of filled vertices plus
/// open edges, with products of open-edge dimensions capped so that dense
/// evaluation stays cheap. Deterministic per seed.
TemplateSpec random_template(std::uint64_t seed, const RandomTemplateOptions& options = {});

/// Fill every vertex of the template with i.i.d. complex standard normal
/// tensors (legs in incident-edge order). Deterministic per seed.
NetworkSpec random_assignment(const TemplateSpec& tmpl, std::uint64_t seed);

}  // namespace tncomp
