#include "cen/jordan.hpp"

#include <algorithm>
#include <stdexcept>

#include "cen/instantiate.hpp"

namespace cen {

JordanType::JordanType(std::vector<std::size_t> sizes) : sizes_(std::move(sizes)) {
    for (std::size_t g = 0; g < sizes_.size(); ++g) {
        if (sizes_[g] == 0) throw InvalidArgument("Jordan block of size 0");
        if (g > 0 && sizes_[g] > sizes_[g - 1]) throw InvalidArgument("Jordan block sizes must be nonincreasing");
        offsets_.push_back(dimension_);
        dimension_ += sizes_[g];
    }
}

JordanType JordanType::from_unsorted(std::vector<std::size_t> sizes) {
    std::sort(sizes.begin(), sizes.end(), std::greater<>());
    return JordanType(std::move(sizes));
}

std::map<std::size_t, std::size_t, std::greater<>> JordanType::multiplicities() const {
    std::map<std::size_t, std::size_t, std::greater<>> out;
    for (auto k : sizes_) ++out[k];
    return out;
}

std::string JordanType::to_string() const {
    std::string s = "(";
    for (std::size_t g = 0; g < sizes_.size(); ++g) s += (g ? "," : "") + std::to_string(sizes_[g]);
    return s + ")";
}

std::vector<JordanType> partitions(std::size_t d) {
    std::vector<JordanType> out;
    std::vector<std::size_t> cur;
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t rest, std::size_t cap) {
        if (rest == 0) {
            out.emplace_back(cur);
            return;
        }
        for (std::size_t k = std::min(rest, cap); k >= 1; --k) {
            cur.push_back(k);
            rec(rest - k, k);
            cur.pop_back();
        }
    };
    if (d > 0) rec(d, d);
    return out;
}

template <Scalar S>
Matrix<S> jordan_matrix(const JordanType& type, ScalarDomain dom) {
    Matrix<S> m(dom, type.dimension(), type.dimension());
    for (std::size_t g = 0; g < type.blocks(); ++g)
        for (std::size_t i = 0; i + 1 < type.size(g); ++i) m(type.offset(g) + i, type.offset(g) + i + 1) = S::one(dom);
    return m;
}

template <Scalar S>
Matrix<S> shift_matrix(const JordanType& type, ScalarDomain dom) {
    Matrix<S> m(dom, type.dimension(), type.dimension());
    for (std::size_t g = 0; g < type.blocks(); ++g)
        for (std::size_t i = 0; i + 1 < type.size(g); ++i) m(type.offset(g) + i + 1, type.offset(g) + i) = S::one(dom);
    return m;
}

template <Scalar S>
Nilpotency is_nilpotent(const Matrix<S>& a) {
    if (!a.is_square()) throw ShapeError("nilpotency test of a non-square matrix");
    Matrix<S> power = Matrix<S>::identity(a.domain(), a.rows());
    for (std::size_t n = 1; n <= a.rows(); ++n) {
        power = power * a;
        if (power.is_zero()) return {true, n};
    }
    return {a.rows() == 0, 0};
}

template <Scalar S>
JordanBasis<S> jordan_base(const Matrix<S>& a) {
    const auto nil = is_nilpotent(a);
    if (!nil.nilpotent) throw NotNilpotent();
    const ScalarDomain dom = a.domain();
    const std::size_t d = a.rows();

    std::vector<std::vector<Vector<S>>> kernels(nil.index + 1);
    Matrix<S> power = Matrix<S>::identity(dom, d);
    for (std::size_t i = 1; i <= nil.index; ++i) {
        power = power * a;
        kernels[i] = nullspace(power);
    }

    std::vector<std::vector<Vector<S>>> chains;
    for (std::size_t h = nil.index; h >= 1; --h) {
        std::vector<Vector<S>> cols = kernels[h - 1];
        for (const auto& chain : chains) cols.push_back(chain[chain.size() - h]);
        const std::size_t fixed = cols.size();
        cols.insert(cols.end(), kernels[h].begin(), kernels[h].end());
        const auto red = rref(Matrix<S>::from_columns(dom, d, cols));
        for (auto p : red.pivots) {
            if (p < fixed) continue;
            std::vector<Vector<S>> chain{cols[p]};
            for (std::size_t i = 1; i < h; ++i) chain.push_back(a * chain.back());
            chains.push_back(std::move(chain));
        }
    }

    std::vector<std::size_t> sizes;
    std::vector<Vector<S>> columns;
    for (const auto& chain : chains) {
        sizes.push_back(chain.size());
        columns.insert(columns.end(), chain.begin(), chain.end());
    }
    auto change = Matrix<S>::from_columns(dom, d, columns);
    auto inv = inverse(change);
    return {JordanType(std::move(sizes)), std::move(chains), std::move(change), std::move(inv)};
}

template <Scalar S>
bool verify_base(const Matrix<S>& a, const JordanBasis<S>& basis) {
    const auto& type = basis.type;
    const std::size_t d = type.dimension();
    if (!a.is_square() || a.rows() != d || basis.chains.size() != type.blocks()) return false;
    if (basis.change_of_base.rows() != d || basis.change_of_base.cols() != d) return false;
    for (std::size_t g = 0; g < type.blocks(); ++g) {
        const auto& chain = basis.chains[g];
        if (chain.size() != type.size(g)) return false;
        for (std::size_t i = 0; i < chain.size(); ++i) {
            if (chain[i].size() != d) return false;
            const auto image = a * chain[i];
            if (i + 1 < chain.size() ? image != chain[i + 1] : !is_zero(image)) return false;
            if (basis.change_of_base.column(basis.column(g, i)) != chain[i]) return false;
        }
    }
    if (rank(basis.change_of_base) != d) return false;
    const auto id = Matrix<S>::identity(a.domain(), d);
    if (basis.inverse_change.rows() != d || basis.inverse_change * basis.change_of_base != id) return false;
    return basis.inverse_change * a * basis.change_of_base == shift_matrix<S>(type, a.domain());
}

template <Scalar S>
bool is_indecomposable(const Matrix<S>& a) {
    const auto nil = is_nilpotent(a);
    if (!nil.nilpotent || a.rows() == 0) throw NotNilpotent();
    const bool by_power = !matpow(a, a.rows() - 1).is_zero();
    const bool by_blocks = jordan_base(a).type.blocks() == 1;
    if (by_power != by_blocks) throw std::logic_error("indecomposability criteria disagree");
    return by_power;
}

template <Scalar S>
Matrix<S> block_projection(const JordanBasis<S>& basis, std::size_t delta) {
    if (delta >= basis.type.blocks()) throw InvalidArgument("block index out of range");
    const ScalarDomain dom = basis.change_of_base.domain();
    const std::size_t d = basis.type.dimension();
    Matrix<S> diag(dom, d, d);
    for (std::size_t i = 0; i < basis.type.size(delta); ++i) diag(basis.column(delta, i), basis.column(delta, i)) = S::one(dom);
    return basis.change_of_base * diag * basis.inverse_change;
}

template <Scalar S>
std::vector<std::vector<S>> express_in_base(const JordanBasis<S>& basis, const Vector<S>& u) {
    const auto coords = basis.inverse_change * u;
    std::vector<std::vector<S>> out(basis.type.blocks());
    for (std::size_t g = 0; g < basis.type.blocks(); ++g)
        for (std::size_t i = 0; i < basis.type.size(g); ++i) out[g].push_back(coords[basis.column(g, i)]);
    return out;
}

#define CEN_INSTANTIATE(S)                                                                          \
    template Matrix<S> jordan_matrix<S>(const JordanType&, ScalarDomain);                           \
    template Matrix<S> shift_matrix<S>(const JordanType&, ScalarDomain);                            \
    template Nilpotency is_nilpotent(const Matrix<S>&);                                             \
    template JordanBasis<S> jordan_base(const Matrix<S>&);                                          \
    template bool verify_base(const Matrix<S>&, const JordanBasis<S>&);                             \
    template bool is_indecomposable(const Matrix<S>&);                                              \
    template Matrix<S> block_projection(const JordanBasis<S>&, std::size_t);                        \
    template std::vector<std::vector<S>> express_in_base(const JordanBasis<S>&, const Vector<S>&);
CEN_FOR_EACH_SCALAR(CEN_INSTANTIATE)
#undef CEN_INSTANTIATE

}  // namespace cen
