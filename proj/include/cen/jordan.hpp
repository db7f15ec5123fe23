#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "cen/matrix.hpp"

namespace cen {

/// Block sizes k_1 >= k_2 >= ... >= k_m >= 1 of a nilpotent Jordan base.
class JordanType {
public:
    JordanType() = default;
    /// Throws InvalidArgument unless the sizes are positive and nonincreasing.
    explicit JordanType(std::vector<std::size_t> sizes);
    static JordanType from_unsorted(std::vector<std::size_t> sizes);

    const std::vector<std::size_t>& sizes() const noexcept { return sizes_; }
    std::size_t size(std::size_t block) const { return sizes_.at(block); }
    /// m, the number of blocks (= dim ker A).
    std::size_t blocks() const noexcept { return sizes_.size(); }
    /// n = k_1, the nilpotency index (0 for the empty type).
    std::size_t index() const noexcept { return sizes_.empty() ? 0 : sizes_.front(); }
    /// d = sum of the sizes.
    std::size_t dimension() const noexcept { return dimension_; }
    /// First ambient coordinate of block gamma in block order.
    std::size_t offset(std::size_t block) const { return offsets_.at(block); }

    /// k_{delta,gamma}: k_gamma - k_delta when k_delta < k_gamma, else 0.
    std::size_t shift_gap(std::size_t delta, std::size_t gamma) const {
        return sizes_.at(delta) < sizes_.at(gamma) ? sizes_[gamma] - sizes_[delta] : 0;
    }
    /// l_{i,j} = k_{j,i}.
    std::size_t transposed_gap(std::size_t i, std::size_t j) const { return shift_gap(j, i); }

    /// size e -> number p_e of blocks of that size, largest size first.
    std::map<std::size_t, std::size_t, std::greater<>> multiplicities() const;
    /// v, the number of different block sizes.
    std::size_t distinct_sizes() const { return multiplicities().size(); }

    std::string to_string() const;
    friend bool operator==(const JordanType& a, const JordanType& b) { return a.sizes_ == b.sizes_; }

private:
    std::vector<std::size_t> sizes_;
    std::vector<std::size_t> offsets_;
    std::size_t dimension_ = 0;
};

/// All Jordan types of dimension d, largest first in reverse lexicographic order.
std::vector<JordanType> partitions(std::size_t d);

/// Chains x_{gamma,0}, ..., x_{gamma,k_gamma - 1} with A x_{gamma,i} = x_{gamma,i+1}
/// and A x_{gamma,k_gamma - 1} = 0. Index 0 is the chain top.
template <Scalar S>
struct JordanBasis {
    JordanType type;
    std::vector<std::vector<Vector<S>>> chains;
    /// Columns are the chain vectors in block order.
    Matrix<S> change_of_base;
    Matrix<S> inverse_change;

    std::size_t column(std::size_t block, std::size_t i) const { return type.offset(block) + i; }
};

/// Textbook Jordan matrix: ones on the superdiagonal inside each block.
template <Scalar S>
Matrix<S> jordan_matrix(const JordanType& type, ScalarDomain dom);

/// Matrix of A in its Jordan base: a lower shift inside each block.
template <Scalar S>
Matrix<S> shift_matrix(const JordanType& type, ScalarDomain dom);

struct Nilpotency {
    bool nilpotent;
    /// Least n with A^n = 0 when nilpotent, otherwise 0.
    std::size_t index;
};

template <Scalar S>
Nilpotency is_nilpotent(const Matrix<S>& a);

/// Builds chains from the kernel filtration ker A^i, choosing chain tops of
/// height i greedily (rref pivots) as extensions of ker A^{i-1} plus the
/// images of taller chains. Throws NotNilpotent.
template <Scalar S>
JordanBasis<S> jordan_base(const Matrix<S>& a);

template <Scalar S>
bool verify_base(const Matrix<S>& a, const JordanBasis<S>& basis);

/// A^{d-1} != 0, cross-checked against the block count of jordan_base.
template <Scalar S>
bool is_indecomposable(const Matrix<S>& a);

/// Idempotent projection onto the span of chain delta along the other chains.
template <Scalar S>
Matrix<S> block_projection(const JordanBasis<S>& basis, std::size_t delta);

/// Right coordinates a[gamma][i] with u = sum x_{gamma,i} a[gamma][i].
template <Scalar S>
std::vector<std::vector<S>> express_in_base(const JordanBasis<S>& basis, const Vector<S>& u);

}  // namespace cen
