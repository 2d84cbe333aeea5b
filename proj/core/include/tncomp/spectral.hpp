#pragma once

#include "tncomp/compress.hpp"
#include "tncomp/svd.hpp"
#include "tncomp/tensor.hpp"

#include <cstddef>
#include <vector>

namespace tncomp {

/// Finite set of unit vectors in a common space. States must be normalised
/// to 1e-10; duplicates are legal and flow through every computation as
/// listed (nothing is silently filtered).
class FiducialSet {
public:
    explicit FiducialSet(std::vector<std::vector<Complex>> states);

    std::size_t count() const { return states_.size(); }
    std::size_t dim() const { return states_.front().size(); }
    const std::vector<std::vector<Complex>>& states() const { return states_; }

private:
    std::vector<std::vector<Complex>> states_;
};

struct GramFactorization {
    Tensor gram;                      // m x m Hermitian PSD
    std::size_t rank = 0;             // eigenvalues above eigen_tol * max
    Tensor w;                         // r x m with w^dag w = gram
    double eigen_tol = kDefaultRankTol;
    std::vector<double> eigenvalues;  // descending
    bool w_computed = false;
};

/// Pairwise overlaps and the numerical rank of their span.
GramFactorization gram_matrix(const FiducialSet& f, double eigen_tol = kDefaultRankTol);

/// Fill in the factor W = sqrt(Lambda_r) X_r^dag (rows ordered by descending
/// eigenvalue), so that W^dag W reproduces the Gram matrix on its support.
GramFactorization w_factor(GramFactorization g);

/// The unique linear map with V|Phi_j> = W|j> on the span of the fiducial
/// states, returned as an out-of-span-annihilating matrix on the ambient
/// space. Norm-preserving on the span; V V^dag = I on the memory space.
PartialIsometry encoding_isometry(const FiducialSet& f, const GramFactorization& g);

/// The 6r states (|l> +- |l'>)/sqrt2, (|l> +- i|l'>)/sqrt2, |l>, |l'> with
/// l' the cyclic successor of l, built over the given orthonormal basis.
/// Emitted in that order for l = 1..r; the list contains duplicates by
/// construction and keeps them.
FiducialSet fiducial_family(const std::vector<std::vector<Complex>>& basis);

/// Orthonormal basis of the span as coefficient rows over the input states
/// (modified Gram-Schmidt on overlaps; dependent inputs are skipped and
/// recorded). Works from inner products only.
struct SpanBasis {
    Tensor coefficients;             // r x t; row i = expansion of basis vector i
    std::vector<std::size_t> kept;   // indices of inputs that produced a basis vector
    std::vector<std::size_t> skipped;
};
SpanBasis gram_schmidt_span(const Tensor& gram, double tol = 1e-10);
SpanBasis gram_schmidt_span(const std::vector<std::vector<Complex>>& states, double tol = 1e-10);

/// Spectrum of the mixing channel rho -> (1/m) sum_j U_j rho U_j with
/// U_j = I - 2|psi_j><psi_j|, restricted to the span of the states. The
/// superoperator acts on vectorised operators |A>> = sum A_jk |j>|k>.
struct ChannelSpectrum {
    Tensor superoperator;                 // r^2 x r^2
    std::vector<Complex> eigenvalues;
    std::vector<double> moduli;           // descending
    double gap = 0.0;                     // 1 - second largest modulus
    double diagonal_block_gap = 0.0;      // difference of the two largest
                                          // eigenvalues on the diagonal
                                          // (|l>|l>) subspace
    bool degenerate = false;              // r == 1: no second eigenvalue
};
ChannelSpectrum channel_spectrum(const FiducialSet& f, double rel_tol = kDefaultRankTol,
                                 std::size_t max_memory_dim = 64);

/// Closed-form spectral gap of the channel built on the canonical 6r-state
/// family: 8 sin^2(pi/r) / (3 r). For r = 2 this exceeds 1 and therefore
/// cannot equal 1 - |lambda_2| of any channel; callers compare it against
/// the diagonal-block difference and report both.
double gap_closed_form(unsigned r);

/// Scaling estimate r^2 * eps^-1 * gap^-2 * log2^2(r/eps) for the number of
/// training pairs a span-learning emulator consumes. The constant factor is
/// unknown and taken as 1; treat the value as a growth rate, not a count.
double emulator_sample_estimate(unsigned r, double eps, double gap);

/// Expansion of psi over a spanning set via the frame operator
/// F = sum_k |sigma_k><sigma_k|: coefficients c_k = <sigma_k|F^+|psi>.
struct FrameDecomposition {
    std::vector<Complex> coefficients;
    double residual = 0.0;                // ||sum_k c_k sigma_k - psi||
    double success_probability = 0.0;     // 1 / (s * sum |c_k|^2), unit psi
    double min_nonzero_eigenvalue = 0.0;  // lambda_min of F (= of the Gram)
    double probability_floor = 0.0;       // lambda_min / s, the guaranteed bound
};
FrameDecomposition frame_decompose(const std::vector<std::vector<Complex>>& spanning,
                                   const std::vector<Complex>& psi,
                                   double in_span_tol = 1e-8);

}  // namespace tncomp
