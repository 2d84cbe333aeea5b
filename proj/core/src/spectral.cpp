#include "tncomp/spectral.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace tncomp {

namespace {

using MatrixXc = Eigen::MatrixXcd;
using VectorXc = Eigen::VectorXcd;

MatrixXc states_as_columns(const std::vector<std::vector<Complex>>& states) {
    const std::size_t dim = states.front().size();
    MatrixXc m(dim, states.size());
    for (std::size_t j = 0; j < states.size(); ++j) {
        if (states[j].size() != dim)
            throw std::invalid_argument("states live in different dimensions");
        for (std::size_t i = 0; i < dim; ++i)
            m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = states[j][i];
    }
    return m;
}

Tensor tensor_from_eigen(const MatrixXc& m) {
    Tensor t({static_cast<std::size_t>(m.rows()), static_cast<std::size_t>(m.cols())});
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            t.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = m(i, j);
    return t;
}

MatrixXc eigen_from_tensor(const Tensor& t) {
    MatrixXc m(static_cast<Eigen::Index>(t.shape()[0]), static_cast<Eigen::Index>(t.shape()[1]));
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            m(i, j) = t.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
    return m;
}

}  // namespace

FiducialSet::FiducialSet(std::vector<std::vector<Complex>> states) : states_(std::move(states)) {
    if (states_.empty()) throw std::invalid_argument("fiducial set is empty");
    const std::size_t dim = states_.front().size();
    if (dim == 0) throw std::invalid_argument("fiducial states have dimension zero");
    for (const auto& s : states_) {
        if (s.size() != dim)
            throw std::invalid_argument("fiducial states live in different dimensions");
        double norm2 = 0.0;
        for (const Complex& z : s) norm2 += std::norm(z);
        if (std::abs(std::sqrt(norm2) - 1.0) > 1e-10)
            throw std::invalid_argument("fiducial states must be unit vectors");
    }
}

GramFactorization gram_matrix(const FiducialSet& f, double eigen_tol) {
    const MatrixXc phi = states_as_columns(f.states());
    MatrixXc g = phi.adjoint() * phi;
    // Symmetrise away roundoff so the eigensolver sees an exactly Hermitian
    // input.
    g = (g + g.adjoint().eval()) / 2.0;

    Eigen::SelfAdjointEigenSolver<MatrixXc> solver(g);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("Gram matrix eigendecomposition failed");

    GramFactorization out;
    out.gram = tensor_from_eigen(g);
    out.eigen_tol = eigen_tol;
    const auto& values = solver.eigenvalues();  // ascending
    for (Eigen::Index i = values.size(); i-- > 0;)
        out.eigenvalues.push_back(values(i));
    const double largest = out.eigenvalues.empty() ? 0.0 : out.eigenvalues.front();
    out.rank = 0;
    if (largest > 0.0)
        for (double v : out.eigenvalues)
            if (v > eigen_tol * largest) ++out.rank;
    return out;
}

GramFactorization w_factor(GramFactorization g) {
    const MatrixXc gram = eigen_from_tensor(g.gram);
    Eigen::SelfAdjointEigenSolver<MatrixXc> solver(gram);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("Gram matrix eigendecomposition failed");

    const std::size_t m = static_cast<std::size_t>(gram.rows());
    const std::size_t r = g.rank;
    // W = sqrt(Lambda_r) X_r^dag with eigenpairs in descending order.
    MatrixXc w(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(m));
    for (std::size_t row = 0; row < r; ++row) {
        const Eigen::Index src = static_cast<Eigen::Index>(m - 1 - row);  // ascending -> descending
        const double lambda = std::max(solver.eigenvalues()(src), 0.0);
        w.row(static_cast<Eigen::Index>(row)) =
            std::sqrt(lambda) * solver.eigenvectors().col(src).adjoint();
    }
    g.w = tensor_from_eigen(w);
    g.w_computed = true;
    return g;
}

PartialIsometry encoding_isometry(const FiducialSet& f, const GramFactorization& g) {
    if (!g.w_computed) throw std::invalid_argument("factorization is missing W");
    const MatrixXc phi = states_as_columns(f.states());
    if (static_cast<std::size_t>(phi.cols()) != static_cast<std::size_t>(g.gram.shape()[0]))
        throw std::invalid_argument("factorization does not match the fiducial set");

    const MatrixXc w = eigen_from_tensor(g.w);
    const MatrixXc gram = eigen_from_tensor(g.gram);

    // V = W G^+ Phi^dag: then V Phi = W G^+ G = W, i.e. V|Phi_j> = W|j>,
    // V vanishes on the orthocomplement of the span, and V V^dag = I_r.
    Eigen::SelfAdjointEigenSolver<MatrixXc> solver(gram);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("Gram matrix eigendecomposition failed");
    const std::size_t m = static_cast<std::size_t>(gram.rows());
    MatrixXc pinv = MatrixXc::Zero(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(m));
    const double largest = solver.eigenvalues()(static_cast<Eigen::Index>(m - 1));
    for (Eigen::Index i = 0; i < static_cast<Eigen::Index>(m); ++i) {
        const double lambda = solver.eigenvalues()(i);
        if (lambda > g.eigen_tol * largest)
            pinv += solver.eigenvectors().col(i) * solver.eigenvectors().col(i).adjoint() / lambda;
    }
    const MatrixXc v = w * pinv * phi.adjoint();

    PartialIsometry out;
    out.matrix = tensor_from_eigen(v);
    out.in_dims = {static_cast<std::size_t>(phi.rows())};
    out.out_dim = g.rank;
    out.support_rank = g.rank;
    return out;
}

FiducialSet fiducial_family(const std::vector<std::vector<Complex>>& basis) {
    const std::size_t r = basis.size();
    if (r < 2) throw std::invalid_argument("fiducial family needs a basis of size >= 2");
    const std::size_t dim = basis.front().size();
    for (const auto& b : basis)
        if (b.size() != dim) throw std::invalid_argument("basis vectors of unequal dimension");

    const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
    std::vector<std::vector<Complex>> states;
    states.reserve(6 * r);
    auto combine = [&](std::size_t l, std::size_t l2, Complex beta) {
        std::vector<Complex> v(dim);
        for (std::size_t i = 0; i < dim; ++i)
            v[i] = inv_sqrt2 * (basis[l][i] + beta * basis[l2][i]);
        return v;
    };
    for (std::size_t l = 0; l < r; ++l) {
        const std::size_t l2 = (l + 1) % r;
        states.push_back(combine(l, l2, Complex(1.0)));            // x, +
        states.push_back(combine(l, l2, Complex(-1.0)));           // x, -
        states.push_back(combine(l, l2, Complex(0.0, 1.0)));       // y, +
        states.push_back(combine(l, l2, Complex(0.0, -1.0)));      // y, -
        states.push_back(basis[l]);                                // z, +
        states.push_back(basis[l2]);                               // z, -
    }
    return FiducialSet(std::move(states));
}

SpanBasis gram_schmidt_span(const Tensor& gram, double tol) {
    if (gram.order() != 2 || gram.shape()[0] != gram.shape()[1])
        throw std::invalid_argument("Gram matrix must be square");
    const std::size_t t = gram.shape()[0];
    const MatrixXc g = eigen_from_tensor(gram);

    // Basis vectors are kept as coefficient rows over the inputs; all
    // arithmetic happens through the Gram matrix.
    std::vector<VectorXc> rows;
    SpanBasis out;
    for (std::size_t k = 0; k < t; ++k) {
        VectorXc coeff = VectorXc::Zero(static_cast<Eigen::Index>(t));
        coeff(static_cast<Eigen::Index>(k)) = 1.0;
        for (const VectorXc& prev : rows) {
            // <prev|input_k> = prev^dag G e_k.
            const Complex overlap = (prev.adjoint() * g.col(static_cast<Eigen::Index>(k)))(0);
            coeff -= overlap * prev;
        }
        const double norm2 = std::real((coeff.adjoint() * g * coeff)(0));
        if (norm2 <= tol * tol) {
            out.skipped.push_back(k);
            continue;
        }
        coeff /= std::sqrt(norm2);
        rows.push_back(coeff);
        out.kept.push_back(k);
    }

    if (rows.empty()) throw std::invalid_argument("all inputs are numerically zero");
    out.coefficients = Tensor({rows.size(), t});
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < t; ++j)
            out.coefficients.at(i, j) = rows[i](static_cast<Eigen::Index>(j));
    return out;
}

SpanBasis gram_schmidt_span(const std::vector<std::vector<Complex>>& states, double tol) {
    if (states.empty()) throw std::invalid_argument("no states given");
    const MatrixXc phi = states_as_columns(states);
    return gram_schmidt_span(tensor_from_eigen(MatrixXc(phi.adjoint() * phi)), tol);
}

ChannelSpectrum channel_spectrum(const FiducialSet& f, double rel_tol,
                                 std::size_t max_memory_dim) {
    const MatrixXc phi = states_as_columns(f.states());
    const std::size_t dim = f.dim();
    const std::size_t m = f.count();

    // Coordinates of the states on their span. When the states span the
    // whole ambient space the ambient basis is kept, so the diagonal
    // subspace below matches the basis the family was built on.
    MatrixXc coords;
    std::size_t r = 0;
    {
        MatrixXc gram = phi.adjoint() * phi;
        gram = (gram + gram.adjoint().eval()) / 2.0;
        Eigen::SelfAdjointEigenSolver<MatrixXc> solver(gram);
        if (solver.info() != Eigen::Success)
            throw std::runtime_error("Gram matrix eigendecomposition failed");
        const double largest = solver.eigenvalues()(static_cast<Eigen::Index>(m - 1));
        for (Eigen::Index i = 0; i < static_cast<Eigen::Index>(m); ++i)
            if (solver.eigenvalues()(i) > rel_tol * largest) ++r;
        if (r == dim) {
            coords = phi;
        } else {
            // Orthonormal span basis: Phi X_r Lambda_r^{-1/2}; coordinates
            // are its adjoint applied to the states.
            MatrixXc basis(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(r));
            std::size_t col = 0;
            for (Eigen::Index i = static_cast<Eigen::Index>(m); i-- > 0;) {
                const double lambda = solver.eigenvalues()(i);
                if (lambda <= rel_tol * largest) continue;
                basis.col(static_cast<Eigen::Index>(col++)) =
                    phi * solver.eigenvectors().col(i) / std::sqrt(lambda);
            }
            coords = basis.adjoint() * phi;
        }
    }
    if (r * r > max_memory_dim * max_memory_dim)
        throw std::invalid_argument("superoperator dimension exceeds the configured limit");

    // Superoperator in the |A>> = sum A_jk |j>|k> convention:
    // rho -> U rho U^dag corresponds to U (x) conj(U).
    const std::size_t r2 = r * r;
    MatrixXc super = MatrixXc::Zero(static_cast<Eigen::Index>(r2), static_cast<Eigen::Index>(r2));
    for (std::size_t j = 0; j < m; ++j) {
        const VectorXc psi = coords.col(static_cast<Eigen::Index>(j));
        const MatrixXc u = MatrixXc::Identity(static_cast<Eigen::Index>(r),
                                              static_cast<Eigen::Index>(r)) -
                           2.0 * (psi * psi.adjoint());
        const MatrixXc uc = u.conjugate();
        for (std::size_t a = 0; a < r; ++a)
            for (std::size_t b = 0; b < r; ++b)
                for (std::size_t c = 0; c < r; ++c)
                    for (std::size_t d = 0; d < r; ++d)
                        super(static_cast<Eigen::Index>(a * r + b),
                              static_cast<Eigen::Index>(c * r + d)) +=
                            u(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(c)) *
                            uc(static_cast<Eigen::Index>(b), static_cast<Eigen::Index>(d)) /
                            static_cast<double>(m);
    }

    ChannelSpectrum out;
    out.superoperator = tensor_from_eigen(super);

    Eigen::ComplexEigenSolver<MatrixXc> solver(super, /*computeEigenvectors=*/false);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("superoperator eigendecomposition failed");
    for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i)
        out.eigenvalues.push_back(solver.eigenvalues()(i));
    for (const Complex& z : out.eigenvalues) out.moduli.push_back(std::abs(z));
    std::sort(out.moduli.begin(), out.moduli.end(), std::greater<double>());

    if (out.moduli.size() < 2) {
        out.degenerate = true;
        out.gap = 0.0;
        out.diagonal_block_gap = 0.0;
        return out;
    }
    out.gap = 1.0 - out.moduli[1];

    // Restriction to the diagonal subspace span{|l>|l>}, which the channel
    // leaves invariant for the canonical family; the difference of its two
    // largest eigenvalues is the closed form's numerical counterpart.
    MatrixXc block(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(r));
    for (std::size_t a = 0; a < r; ++a)
        for (std::size_t b = 0; b < r; ++b)
            block(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) =
                super(static_cast<Eigen::Index>(a * r + a), static_cast<Eigen::Index>(b * r + b));
    Eigen::ComplexEigenSolver<MatrixXc> block_solver(block, false);
    if (block_solver.info() != Eigen::Success)
        throw std::runtime_error("diagonal block eigendecomposition failed");
    std::vector<double> reals;
    for (Eigen::Index i = 0; i < block_solver.eigenvalues().size(); ++i)
        reals.push_back(std::real(block_solver.eigenvalues()(i)));
    std::sort(reals.begin(), reals.end(), std::greater<double>());
    out.diagonal_block_gap = reals.size() >= 2 ? reals[0] - reals[1] : 0.0;

    return out;
}

double gap_closed_form(unsigned r) {
    if (r < 2) throw std::invalid_argument("closed-form gap needs r >= 2");
    const double s = std::sin(std::numbers::pi / static_cast<double>(r));
    return 8.0 * s * s / (3.0 * static_cast<double>(r));
}

double emulator_sample_estimate(unsigned r, double eps, double gap) {
    if (r < 1) throw std::invalid_argument("r must be positive");
    if (!(eps > 0.0 && eps < 1.0)) throw std::invalid_argument("eps must lie in (0,1)");
    if (!(gap > 0.0 && gap <= 1.0)) throw std::invalid_argument("gap must lie in (0,1]");
    const double rr = static_cast<double>(r);
    const double lg = std::log2(rr / eps);
    return rr * rr / eps / (gap * gap) * lg * lg;
}

FrameDecomposition frame_decompose(const std::vector<std::vector<Complex>>& spanning,
                                   const std::vector<Complex>& psi, double in_span_tol) {
    if (spanning.empty()) throw std::invalid_argument("spanning set is empty");
    const MatrixXc sigma = states_as_columns(spanning);
    if (psi.size() != static_cast<std::size_t>(sigma.rows()))
        throw std::invalid_argument("psi dimension does not match the spanning set");
    const std::size_t s = spanning.size();

    const VectorXc target =
        Eigen::Map<const VectorXc>(psi.data(), static_cast<Eigen::Index>(psi.size()));

    // Frame operator F = sum_k |sigma_k><sigma_k| = Sigma Sigma^dag.
    MatrixXc f = sigma * sigma.adjoint();
    f = (f + f.adjoint().eval()) / 2.0;
    Eigen::SelfAdjointEigenSolver<MatrixXc> solver(f);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("frame operator eigendecomposition failed");

    const Eigen::Index dim = f.rows();
    const double largest = solver.eigenvalues()(dim - 1);
    if (largest <= 0.0) throw std::invalid_argument("spanning set is numerically zero");

    double lambda_min = largest;
    MatrixXc pinv = MatrixXc::Zero(dim, dim);
    MatrixXc support = MatrixXc::Zero(dim, dim);
    for (Eigen::Index i = 0; i < dim; ++i) {
        const double lambda = solver.eigenvalues()(i);
        if (lambda <= kDefaultRankTol * largest) continue;
        lambda_min = std::min(lambda_min, lambda);
        const MatrixXc proj = solver.eigenvectors().col(i) * solver.eigenvectors().col(i).adjoint();
        pinv += proj / lambda;
        support += proj;
    }

    const double out_of_span = (target - support * target).norm();
    if (out_of_span > in_span_tol)
        throw std::invalid_argument("psi lies outside the span of the given states");

    FrameDecomposition out;
    const VectorXc dual = pinv * target;  // F^+ |psi>
    double sum_sq = 0.0;
    for (std::size_t k = 0; k < s; ++k) {
        const Complex c = sigma.col(static_cast<Eigen::Index>(k)).dot(dual);
        out.coefficients.push_back(c);
        sum_sq += std::norm(c);
    }

    VectorXc rebuilt = VectorXc::Zero(dim);
    for (std::size_t k = 0; k < s; ++k)
        rebuilt += out.coefficients[k] * sigma.col(static_cast<Eigen::Index>(k));
    out.residual = (rebuilt - target).norm();

    out.min_nonzero_eigenvalue = lambda_min;
    out.success_probability = 1.0 / (static_cast<double>(s) * sum_sq);
    out.probability_floor = lambda_min / static_cast<double>(s);
    return out;
}

}  // namespace tncomp
