#include "tncomp/svd.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>

#include <stdexcept>

namespace tncomp {

namespace {
using RowMajorMatrix =
    Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
}

Tensor SvdResult::support_isometry() const {
    if (numerical_rank == 0)
        throw std::logic_error("support isometry of a rank-0 matrix is empty");
    const std::size_t rows = u.shape()[0];
    Tensor out({rows, numerical_rank});
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < numerical_rank; ++j) out.at(i, j) = u.at(i, j);
    return out;
}

SvdResult svd_support(const Tensor& m, double rel_tol) {
    if (m.order() != 2) throw std::invalid_argument("svd_support expects a matrix");
    if (!(rel_tol > 0.0 && rel_tol < 1.0))
        throw std::invalid_argument("rel_tol must lie in (0,1)");

    const std::size_t rows = m.shape()[0], cols = m.shape()[1];
    Eigen::Map<const RowMajorMatrix> a(m.entries().data(), rows, cols);

    Eigen::BDCSVD<Eigen::MatrixXcd> svd(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
    if (svd.info() != Eigen::Success)
        throw std::runtime_error("SVD failed to converge");

    const auto& sv = svd.singularValues();
    const std::size_t k = static_cast<std::size_t>(sv.size());

    SvdResult out;
    out.singular_values.assign(sv.data(), sv.data() + k);

    const double largest = k > 0 ? sv(0) : 0.0;
    std::size_t rank = 0;
    if (largest > 0.0)
        while (rank < k && sv(rank) > rel_tol * largest) ++rank;
    out.numerical_rank = rank;

    Tensor u({rows, k});
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < k; ++j)
            u.at(i, j) = svd.matrixU()(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
    out.u = std::move(u);

    Tensor vd({k, cols});
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            vd.at(i, j) = std::conj(
                svd.matrixV()(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(i)));
    out.v_dagger = std::move(vd);

    return out;
}

}  // namespace tncomp
