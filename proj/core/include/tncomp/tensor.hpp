#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace tncomp {

using Complex = std::complex<double>;

/// Dense complex tensor with an ordered list of legs.
///
/// Entries are stored row-major over the legs in order: the last leg is the
/// fastest-varying index. Legs may optionally carry distinct string labels
/// and an ingoing/outgoing flag; both are pure bookkeeping and never affect
/// the entry layout. Values are immutable in spirit: every operation below
/// returns a fresh tensor.
class Tensor {
public:
    Tensor() = default;

    /// Zero tensor of the given shape. All extents must be >= 1.
    explicit Tensor(std::vector<std::size_t> shape);

    Tensor(std::vector<std::size_t> shape, std::vector<Complex> entries);

    static Tensor scalar(Complex value);
    static Tensor identity(std::size_t dim);

    std::size_t order() const { return shape_.size(); }
    const std::vector<std::size_t>& shape() const { return shape_; }
    std::size_t extent(std::size_t leg) const;
    std::size_t size() const { return entries_.size(); }

    std::span<const Complex> entries() const { return entries_; }
    std::span<Complex> entries() { return entries_; }

    Complex& operator[](std::size_t flat) { return entries_[flat]; }
    const Complex& operator[](std::size_t flat) const { return entries_[flat]; }

    /// Multi-index access; the number of indices must equal the order.
    template <typename... Ix>
    Complex& at(Ix... ix) {
        return entries_[flat_index({static_cast<std::size_t>(ix)...})];
    }
    template <typename... Ix>
    const Complex& at(Ix... ix) const {
        return entries_[flat_index({static_cast<std::size_t>(ix)...})];
    }

    std::size_t flat_index(const std::vector<std::size_t>& idx) const;
    std::vector<std::size_t> unflatten(std::size_t flat) const;

    bool has_labels() const { return !labels_.empty(); }
    const std::vector<std::string>& leg_labels() const { return labels_; }
    void set_leg_labels(std::vector<std::string> labels);
    void clear_leg_labels() { labels_.clear(); }
    std::size_t leg_by_label(const std::string& label) const;

    /// Ingoing/outgoing bookkeeping per leg (default: all outgoing).
    const std::vector<bool>& leg_inward() const { return inward_; }
    void set_leg_inward(std::vector<bool> inward);

    double norm() const;  // Frobenius

    Tensor& operator*=(Complex c);
    Tensor& operator+=(const Tensor& other);
    Tensor& operator-=(const Tensor& other);

private:
    std::vector<std::size_t> shape_;
    std::vector<Complex> entries_;
    std::vector<std::string> labels_;  // empty or one per leg
    std::vector<bool> inward_;         // empty means all-outgoing
};

Tensor operator*(Complex c, const Tensor& t);
Tensor operator+(const Tensor& a, const Tensor& b);
Tensor operator-(const Tensor& a, const Tensor& b);

/// result leg k carries input leg perm[k]; perm must be a permutation.
Tensor permute(const Tensor& t, const std::vector<std::size_t>& perm);

/// Reinterpret entries under a new shape of the same total size.
Tensor reshape(const Tensor& t, std::vector<std::size_t> shape);

/// Contract the given (a-leg, b-leg) pairs. Result legs are the unpaired
/// legs of `a` followed by the unpaired legs of `b`, each in original order.
Tensor contract_pair(const Tensor& a, const Tensor& b,
                     const std::vector<std::pair<std::size_t, std::size_t>>& pairs);

/// Label-addressed variant; labels must be present on both tensors.
Tensor contract_pair_labels(const Tensor& a, const Tensor& b,
                            const std::vector<std::pair<std::string, std::string>>& label_pairs);

/// Flip the ingoing/outgoing flag of the named legs. Entries are returned
/// bit-identical; nothing is conjugated or permuted.
Tensor vectorize(const Tensor& t, const std::vector<std::size_t>& legs_to_reverse);
Tensor vectorize(const Tensor& t, const std::vector<std::string>& labels_to_reverse);

/// Group legs into a matrix: rows run over `row_legs` (row-major in the given
/// order), columns over `col_legs`. The two lists must partition all legs.
Tensor matricize(const Tensor& t, const std::vector<std::size_t>& row_legs,
                 const std::vector<std::size_t>& col_legs);

/// Inverse of matricize: rebuild the tensor with `shape`, given the leg
/// grouping that produced the matrix.
Tensor dematricize(const Tensor& m, const std::vector<std::size_t>& shape,
                   const std::vector<std::size_t>& row_legs,
                   const std::vector<std::size_t>& col_legs);

}  // namespace tncomp
