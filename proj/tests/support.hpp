#pragma once

#include <initializer_list>
#include <random>
#include <span>
#include <vector>

#include "cen/pi.hpp"

namespace cen::testing {

inline ScalarDomain Q() { return ScalarDomain::rationals(); }
inline ScalarDomain F(std::uint64_t p) { return ScalarDomain::prime_field(p); }
inline ScalarDomain H() { return ScalarDomain::quaternions(); }

template <Scalar S>
S lit(long v, const ScalarDomain& dom) {
    if constexpr (std::is_same_v<S, ModP>)
        return ModP(v, dom.modulus());
    else
        return S(v);
}

template <Scalar S>
Matrix<S> mat(const ScalarDomain& dom, std::initializer_list<std::initializer_list<long>> rows) {
    std::vector<std::vector<S>> out;
    for (const auto& r : rows) {
        out.emplace_back();
        for (const long v : r) out.back().push_back(lit<S>(v, dom));
    }
    return Matrix<S>::from_rows(dom, out);
}

template <Scalar S>
S random_scalar(const ScalarDomain& dom, std::mt19937_64& rng) {
    S out = S::zero(dom);
    for (const auto& b : S::center_basis(dom)) out += S::from_center(random_center<S>(rng, dom), dom) * b;
    return out;
}

template <Scalar S>
Matrix<S> random_matrix(const ScalarDomain& dom, std::size_t r, std::size_t c, std::mt19937_64& rng) {
    Matrix<S> m(dom, r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = random_scalar<S>(dom, rng);
    return m;
}

template <Scalar S>
Matrix<S> random_invertible(const ScalarDomain& dom, std::size_t n, std::mt19937_64& rng) {
    while (true) {
        Matrix<S> m = random_matrix<S>(dom, n, n, rng);
        if (rank(m) == n) return m;
    }
}

/// P J P^{-1} for a random invertible P, J the canonical matrix of the type.
template <Scalar S>
Matrix<S> planted_nilpotent(const JordanType& type, const ScalarDomain& dom, std::mt19937_64& rng) {
    const Matrix<S> p = random_invertible<S>(dom, type.dimension(), rng);
    return p * jordan_matrix<S>(type, dom) * inverse(p);
}

template <Scalar S>
Polynomial<S> random_polynomial(const ScalarDomain& dom, std::size_t terms, std::mt19937_64& rng) {
    std::vector<S> c;
    for (std::size_t i = 0; i < terms; ++i) c.push_back(S::from_center(random_center<S>(rng, dom), dom));
    return Polynomial<S>(dom, c);
}

template <Scalar S>
bool same_span(const std::vector<Matrix<S>>& a, const std::vector<Matrix<S>>& b) {
    return same_center_span(std::span<const Matrix<S>>(a), std::span<const Matrix<S>>(b));
}

}  // namespace cen::testing
