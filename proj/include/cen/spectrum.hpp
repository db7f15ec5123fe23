#pragma once

#include <vector>

#include "cen/polynomial.hpp"

namespace cen {

/// Largest matrix size accepted by the characteristic polynomial.
inline constexpr std::size_t kMaxSpectrumSize = 16;

/// Monic f of least degree with f(A) = 0: the first linear dependence among
/// I, A, A^2, ... Throws UnsupportedDomain over the quaternions.
template <Scalar S>
Polynomial<S> minimal_polynomial(const Matrix<S>& a);

/// det(zI - A) via reduction to upper Hessenberg form. Throws
/// UnsupportedDomain over the quaternions and for sizes above 16.
template <Scalar S>
Polynomial<S> characteristic_polynomial(const Matrix<S>& a);

template <Scalar S>
struct Eigenvalue {
    S value;
    std::size_t multiplicity;
};

/// Roots of f with multiplicity, in increasing order of the canonical
/// representative. Throws NonSplitSpectrum naming the cofactor without roots.
template <Scalar S>
std::vector<Eigenvalue<S>> linear_factors(const Polynomial<S>& f);

/// Eigenvalues of A with algebraic multiplicities; throws NonSplitSpectrum
/// when the characteristic polynomial does not split over the base field.
template <Scalar S>
std::vector<Eigenvalue<S>> eigen_split(const Matrix<S>& a);

}  // namespace cen
