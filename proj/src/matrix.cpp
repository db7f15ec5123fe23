#include "cen/matrix.hpp"

#include "cen/instantiate.hpp"

namespace cen {

template <Scalar S>
RrefResult<S> rref(const Matrix<S>& a) {
    Matrix<S> r = a;
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t c = 0; c < r.cols() && row < r.rows(); ++c) {
        std::size_t found = row;
        while (found < r.rows() && r(found, c).is_zero()) ++found;
        if (found == r.rows()) continue;
        r.swap_rows(found, row);
        const S inv = r(row, c).inverse();
        for (std::size_t j = c; j < r.cols(); ++j) r(row, j) = inv * r(row, j);
        for (std::size_t i = 0; i < r.rows(); ++i) {
            if (i == row || r(i, c).is_zero()) continue;
            const S f = r(i, c);
            for (std::size_t j = c; j < r.cols(); ++j)
                if (!r(row, j).is_zero()) r(i, j) -= f * r(row, j);
        }
        pivots.push_back(c);
        ++row;
    }
    return {std::move(r), std::move(pivots), row};
}

template <Scalar S>
std::size_t rank(const Matrix<S>& a) {
    return rref(a).rank;
}

template <Scalar S>
std::vector<Vector<S>> nullspace(const Matrix<S>& a) {
    const auto [r, pivots, rk] = rref(a);
    std::vector<bool> is_pivot(a.cols(), false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<Vector<S>> basis;
    for (std::size_t f = 0; f < a.cols(); ++f) {
        if (is_pivot[f]) continue;
        Vector<S> v(a.cols(), S::zero(a.domain()));
        v[f] = S::one(a.domain());
        for (std::size_t k = 0; k < rk; ++k) v[pivots[k]] = -r(k, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

template <Scalar S>
Matrix<S> inverse(const Matrix<S>& a) {
    if (!a.is_square()) throw DimensionMismatch("inverse of a non-square matrix");
    const std::size_t n = a.rows();
    if (n == 0) return a;
    Matrix<S> aug(a.domain(), n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
        aug(i, n + i) = S::one(a.domain());
    }
    const auto red = rref(aug);
    if (red.rank < n || red.pivots[n - 1] != n - 1) throw SingularMatrix();
    return red.reduced.block(0, n, n, n);
}

template <Scalar S>
std::optional<Vector<S>> solve(const Matrix<S>& a, const Vector<S>& b) {
    if (b.size() != a.rows()) throw DimensionMismatch("right-hand side length");
    Matrix<S> aug(a.domain(), a.rows(), a.cols() + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
        aug(i, a.cols()) = b[i];
    }
    const auto red = rref(aug);
    if (red.rank > 0 && red.pivots[red.rank - 1] == a.cols()) return std::nullopt;
    Vector<S> x(a.cols(), S::zero(a.domain()));
    for (std::size_t k = 0; k < red.rank; ++k) x[red.pivots[k]] = red.reduced(k, a.cols());
    return x;
}

template <Scalar S>
Matrix<typename S::Center> center_coordinates(std::span<const Matrix<S>> mats) {
    using C = typename S::Center;
    if (mats.empty()) return Matrix<C>(ScalarDomain::rationals(), 0, 0);
    const ScalarDomain dom = mats.front().domain();
    const ScalarDomain cdom = S::zero(dom).center_coordinates().front().domain();
    const std::size_t deg = dom.center_degree();
    const std::size_t entries = mats.front().rows() * mats.front().cols();
    Matrix<C> out(cdom, entries * deg, mats.size());
    for (std::size_t j = 0; j < mats.size(); ++j) {
        if (mats[j].rows() * mats[j].cols() != entries) throw DimensionMismatch("matrices of different shapes");
        const auto data = mats[j].data();
        for (std::size_t e = 0; e < entries; ++e) {
            const auto coords = data[e].center_coordinates();
            for (std::size_t t = 0; t < deg; ++t) out(e * deg + t, j) = coords[t];
        }
    }
    return out;
}

template <Scalar S>
std::size_t center_rank(std::span<const Matrix<S>> mats) {
    if (mats.empty()) return 0;
    return rank(center_coordinates(mats));
}

template <Scalar S>
Matrix<S> center_combination(std::span<const Matrix<S>> mats, std::span<const typename S::Center> coefficients) {
    if (mats.empty() || mats.size() != coefficients.size()) throw DimensionMismatch("combination length");
    const ScalarDomain dom = mats.front().domain();
    Matrix<S> out(dom, mats.front().rows(), mats.front().cols());
    for (std::size_t i = 0; i < mats.size(); ++i) {
        if (coefficients[i].is_zero()) continue;
        out += scale(S::from_center(coefficients[i], dom), mats[i]);
    }
    return out;
}

Matrix<Rational> regular_representation(const Rational& a) {
    Matrix<Rational> m(ScalarDomain::rationals(), 1, 1);
    m(0, 0) = a;
    return m;
}

Matrix<ModP> regular_representation(const ModP& a) {
    Matrix<ModP> m(a.domain(), 1, 1);
    m(0, 0) = a;
    return m;
}

Matrix<Rational> regular_representation(const Quaternion& a) {
    const auto basis = Quaternion::center_basis(ScalarDomain::quaternions());
    Matrix<Rational> m(ScalarDomain::rationals(), 4, 4);
    for (std::size_t t = 0; t < 4; ++t) {
        const Quaternion col = a * basis[t];
        for (std::size_t s = 0; s < 4; ++s) m(s, t) = col[s];
    }
    return m;
}

template <Scalar S>
Matrix<typename S::Center> regular_representation(const Matrix<S>& m) {
    using C = typename S::Center;
    const std::size_t deg = m.domain().center_degree();
    const ScalarDomain cdom = S::zero(m.domain()).center_coordinates().front().domain();
    Matrix<C> out(cdom, m.rows() * deg, m.cols() * deg);
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (m(i, j).is_zero()) continue;
            const auto blk = regular_representation(m(i, j));
            for (std::size_t s = 0; s < deg; ++s)
                for (std::size_t t = 0; t < deg; ++t) out(i * deg + s, j * deg + t) = blk(s, t);
        }
    return out;
}

#define CEN_INSTANTIATE(S)                                                                                    \
    template RrefResult<S> rref(const Matrix<S>&);                                                            \
    template std::size_t rank(const Matrix<S>&);                                                              \
    template std::vector<Vector<S>> nullspace(const Matrix<S>&);                                              \
    template Matrix<S> inverse(const Matrix<S>&);                                                             \
    template std::optional<Vector<S>> solve(const Matrix<S>&, const Vector<S>&);                              \
    template Matrix<S::Center> center_coordinates(std::span<const Matrix<S>>);                                \
    template std::size_t center_rank(std::span<const Matrix<S>>);                                             \
    template Matrix<S> center_combination(std::span<const Matrix<S>>, std::span<const S::Center>);            \
    template Matrix<S::Center> regular_representation(const Matrix<S>&);
CEN_FOR_EACH_SCALAR(CEN_INSTANTIATE)
#undef CEN_INSTANTIATE

}  // namespace cen
