#include "tncomp/tensor.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace tncomp {

namespace {

std::size_t checked_product(const std::vector<std::size_t>& shape) {
    std::size_t n = 1;
    for (std::size_t e : shape) {
        if (e == 0) throw std::invalid_argument("tensor extent must be >= 1");
        if (n > 0 && e > SIZE_MAX / n) throw std::invalid_argument("tensor size overflow");
        n *= e;
    }
    return n;
}

using RowMajorMatrix =
    Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

}  // namespace

Tensor::Tensor(std::vector<std::size_t> shape)
    : shape_(std::move(shape)), entries_(checked_product(shape_)) {}

Tensor::Tensor(std::vector<std::size_t> shape, std::vector<Complex> entries)
    : shape_(std::move(shape)), entries_(std::move(entries)) {
    if (entries_.size() != checked_product(shape_))
        throw std::invalid_argument("entry count does not match shape product");
}

Tensor Tensor::scalar(Complex value) {
    Tensor t{std::vector<std::size_t>{}, std::vector<Complex>{value}};
    return t;
}

Tensor Tensor::identity(std::size_t dim) {
    Tensor t({dim, dim});
    for (std::size_t i = 0; i < dim; ++i) t.at(i, i) = 1.0;
    return t;
}

std::size_t Tensor::extent(std::size_t leg) const {
    if (leg >= shape_.size()) throw std::invalid_argument("leg index out of range");
    return shape_[leg];
}

std::size_t Tensor::flat_index(const std::vector<std::size_t>& idx) const {
    if (idx.size() != shape_.size())
        throw std::invalid_argument("index count does not match tensor order");
    std::size_t flat = 0;
    for (std::size_t k = 0; k < idx.size(); ++k) {
        if (idx[k] >= shape_[k]) throw std::out_of_range("tensor index out of range");
        flat = flat * shape_[k] + idx[k];
    }
    return flat;
}

std::vector<std::size_t> Tensor::unflatten(std::size_t flat) const {
    std::vector<std::size_t> idx(shape_.size());
    for (std::size_t k = shape_.size(); k-- > 0;) {
        idx[k] = flat % shape_[k];
        flat /= shape_[k];
    }
    return idx;
}

void Tensor::set_leg_labels(std::vector<std::string> labels) {
    if (labels.size() != shape_.size())
        throw std::invalid_argument("label count does not match tensor order");
    std::set<std::string> seen(labels.begin(), labels.end());
    if (seen.size() != labels.size())
        throw std::invalid_argument("leg labels must be pairwise distinct");
    labels_ = std::move(labels);
}

std::size_t Tensor::leg_by_label(const std::string& label) const {
    for (std::size_t k = 0; k < labels_.size(); ++k)
        if (labels_[k] == label) return k;
    throw std::invalid_argument("unknown leg label: " + label);
}

void Tensor::set_leg_inward(std::vector<bool> inward) {
    if (inward.size() != shape_.size())
        throw std::invalid_argument("direction count does not match tensor order");
    inward_ = std::move(inward);
}

double Tensor::norm() const {
    double s = 0.0;
    for (const Complex& z : entries_) s += std::norm(z);
    return std::sqrt(s);
}

Tensor& Tensor::operator*=(Complex c) {
    for (Complex& z : entries_) z *= c;
    return *this;
}

Tensor& Tensor::operator+=(const Tensor& other) {
    if (shape_ != other.shape_) throw std::invalid_argument("shape mismatch in tensor sum");
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += other.entries_[i];
    return *this;
}

Tensor& Tensor::operator-=(const Tensor& other) {
    if (shape_ != other.shape_) throw std::invalid_argument("shape mismatch in tensor difference");
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= other.entries_[i];
    return *this;
}

Tensor operator*(Complex c, const Tensor& t) {
    Tensor r = t;
    r *= c;
    return r;
}

Tensor operator+(const Tensor& a, const Tensor& b) {
    Tensor r = a;
    r += b;
    return r;
}

Tensor operator-(const Tensor& a, const Tensor& b) {
    Tensor r = a;
    r -= b;
    return r;
}

Tensor permute(const Tensor& t, const std::vector<std::size_t>& perm) {
    const std::size_t n = t.order();
    if (perm.size() != n) throw std::invalid_argument("permutation length mismatch");
    std::vector<bool> used(n, false);
    for (std::size_t p : perm) {
        if (p >= n || used[p]) throw std::invalid_argument("invalid permutation");
        used[p] = true;
    }

    std::vector<std::size_t> new_shape(n);
    for (std::size_t k = 0; k < n; ++k) new_shape[k] = t.shape()[perm[k]];
    Tensor out(new_shape);

    // Strides of the source tensor, reordered to the output leg order, let us
    // walk the output row-major while accumulating the source flat index.
    std::vector<std::size_t> src_stride(n, 1);
    for (std::size_t k = n; k-- > 1;)
        src_stride[k - 1] = src_stride[k] * t.shape()[k];
    std::vector<std::size_t> stride(n);
    for (std::size_t k = 0; k < n; ++k) stride[k] = src_stride[perm[k]];

    std::vector<std::size_t> idx(n, 0);
    std::size_t src = 0;
    for (std::size_t flat = 0; flat < out.size(); ++flat) {
        out[flat] = t[src];
        for (std::size_t k = n; k-- > 0;) {
            src += stride[k];
            if (++idx[k] < new_shape[k]) break;
            src -= stride[k] * new_shape[k];
            idx[k] = 0;
        }
    }

    if (t.has_labels()) {
        std::vector<std::string> labels(n);
        for (std::size_t k = 0; k < n; ++k) labels[k] = t.leg_labels()[perm[k]];
        out.set_leg_labels(std::move(labels));
    }
    if (!t.leg_inward().empty()) {
        std::vector<bool> inward(n);
        for (std::size_t k = 0; k < n; ++k) inward[k] = t.leg_inward()[perm[k]];
        out.set_leg_inward(std::move(inward));
    }
    return out;
}

Tensor reshape(const Tensor& t, std::vector<std::size_t> shape) {
    Tensor out(std::move(shape), std::vector<Complex>(t.entries().begin(), t.entries().end()));
    return out;
}

Tensor contract_pair(const Tensor& a, const Tensor& b,
                     const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
    std::vector<bool> a_paired(a.order(), false), b_paired(b.order(), false);
    for (const auto& [la, lb] : pairs) {
        if (la >= a.order() || lb >= b.order())
            throw std::invalid_argument("contraction leg out of range");
        if (a_paired[la] || b_paired[lb])
            throw std::invalid_argument("leg paired twice in contraction");
        if (a.shape()[la] != b.shape()[lb])
            throw std::invalid_argument("dimension mismatch on contracted pair");
        a_paired[la] = true;
        b_paired[lb] = true;
    }

    std::vector<std::size_t> a_free, b_free;
    for (std::size_t k = 0; k < a.order(); ++k)
        if (!a_paired[k]) a_free.push_back(k);
    for (std::size_t k = 0; k < b.order(); ++k)
        if (!b_paired[k]) b_free.push_back(k);

    // a -> (free..., paired...) and b -> (paired..., free...), then one GEMM.
    std::vector<std::size_t> a_perm = a_free, b_perm;
    for (const auto& [la, lb] : pairs) {
        a_perm.push_back(la);
        b_perm.push_back(lb);
    }
    b_perm.insert(b_perm.end(), b_free.begin(), b_free.end());

    Tensor pa = permute(a, a_perm);
    Tensor pb = permute(b, b_perm);

    std::size_t m = 1, k = 1, n = 1;
    for (std::size_t leg : a_free) m *= a.shape()[leg];
    for (const auto& [la, lb] : pairs) {
        (void)lb;
        k *= a.shape()[la];
    }
    for (std::size_t leg : b_free) n *= b.shape()[leg];

    std::vector<std::size_t> out_shape;
    for (std::size_t leg : a_free) out_shape.push_back(a.shape()[leg]);
    for (std::size_t leg : b_free) out_shape.push_back(b.shape()[leg]);
    Tensor out(out_shape);

    Eigen::Map<const RowMajorMatrix> ma(pa.entries().data(), m, k);
    Eigen::Map<const RowMajorMatrix> mb(pb.entries().data(), k, n);
    Eigen::Map<RowMajorMatrix> mo(out.entries().data(), m, n);
    mo.noalias() = ma * mb;

    if (a.has_labels() && b.has_labels()) {
        std::vector<std::string> labels;
        for (std::size_t leg : a_free) labels.push_back(a.leg_labels()[leg]);
        for (std::size_t leg : b_free) labels.push_back(b.leg_labels()[leg]);
        std::set<std::string> seen(labels.begin(), labels.end());
        if (seen.size() == labels.size()) out.set_leg_labels(std::move(labels));
    }
    if (!a.leg_inward().empty() || !b.leg_inward().empty()) {
        std::vector<bool> inward;
        for (std::size_t leg : a_free)
            inward.push_back(a.leg_inward().empty() ? false : a.leg_inward()[leg]);
        for (std::size_t leg : b_free)
            inward.push_back(b.leg_inward().empty() ? false : b.leg_inward()[leg]);
        out.set_leg_inward(std::move(inward));
    }
    return out;
}

Tensor contract_pair_labels(const Tensor& a, const Tensor& b,
                            const std::vector<std::pair<std::string, std::string>>& label_pairs) {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    pairs.reserve(label_pairs.size());
    for (const auto& [la, lb] : label_pairs)
        pairs.emplace_back(a.leg_by_label(la), b.leg_by_label(lb));
    return contract_pair(a, b, pairs);
}

Tensor vectorize(const Tensor& t, const std::vector<std::size_t>& legs_to_reverse) {
    Tensor out = t;
    std::vector<bool> inward = t.leg_inward();
    if (inward.empty()) inward.assign(t.order(), false);
    for (std::size_t leg : legs_to_reverse) {
        if (leg >= t.order()) throw std::invalid_argument("unknown leg in vectorize");
        inward[leg] = !inward[leg];
    }
    out.set_leg_inward(std::move(inward));
    return out;
}

Tensor vectorize(const Tensor& t, const std::vector<std::string>& labels_to_reverse) {
    std::vector<std::size_t> legs;
    legs.reserve(labels_to_reverse.size());
    for (const auto& label : labels_to_reverse) legs.push_back(t.leg_by_label(label));
    return vectorize(t, legs);
}

namespace {

void check_partition(const Tensor& t, const std::vector<std::size_t>& row_legs,
                     const std::vector<std::size_t>& col_legs) {
    std::vector<bool> seen(t.order(), false);
    for (std::size_t leg : row_legs) {
        if (leg >= t.order() || seen[leg])
            throw std::invalid_argument("leg omitted or duplicated in matricize");
        seen[leg] = true;
    }
    for (std::size_t leg : col_legs) {
        if (leg >= t.order() || seen[leg])
            throw std::invalid_argument("leg omitted or duplicated in matricize");
        seen[leg] = true;
    }
    if (row_legs.size() + col_legs.size() != t.order())
        throw std::invalid_argument("leg omitted or duplicated in matricize");
}

}  // namespace

Tensor matricize(const Tensor& t, const std::vector<std::size_t>& row_legs,
                 const std::vector<std::size_t>& col_legs) {
    check_partition(t, row_legs, col_legs);
    std::vector<std::size_t> perm = row_legs;
    perm.insert(perm.end(), col_legs.begin(), col_legs.end());
    Tensor p = permute(t, perm);
    std::size_t rows = 1, cols = 1;
    for (std::size_t leg : row_legs) rows *= t.shape()[leg];
    for (std::size_t leg : col_legs) cols *= t.shape()[leg];
    Tensor out({rows, cols}, std::vector<Complex>(p.entries().begin(), p.entries().end()));
    return out;
}

Tensor dematricize(const Tensor& m, const std::vector<std::size_t>& shape,
                   const std::vector<std::size_t>& row_legs,
                   const std::vector<std::size_t>& col_legs) {
    if (m.order() != 2) throw std::invalid_argument("dematricize expects a matrix");
    Tensor probe(shape);
    check_partition(probe, row_legs, col_legs);

    std::vector<std::size_t> perm = row_legs;
    perm.insert(perm.end(), col_legs.begin(), col_legs.end());
    std::vector<std::size_t> permuted_shape(shape.size());
    for (std::size_t k = 0; k < perm.size(); ++k) permuted_shape[k] = shape[perm[k]];

    Tensor p = reshape(m, permuted_shape);
    std::vector<std::size_t> inverse(perm.size());
    for (std::size_t k = 0; k < perm.size(); ++k) inverse[perm[k]] = k;
    return permute(p, inverse);
}

}  // namespace tncomp
