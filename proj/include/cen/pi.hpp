#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "cen/algebra.hpp"

namespace cen {

/// Sum of c * x_{perm[0]} ... x_{perm[r-1]} with integer coefficients c,
/// read in the center of the scalar domain.
struct MultilinearPoly {
    struct Term {
        long coefficient;
        std::vector<std::size_t> perm;
    };
    std::size_t arity = 0;
    std::vector<Term> terms;

    /// S_r: all r! permutations with their signs.
    static MultilinearPoly standard(std::size_t r);
};

/// Throws DimensionMismatch on arity or shape mismatch.
template <Scalar S>
Matrix<S> eval_poly(const MultilinearPoly& f, std::span<const Matrix<S>> args);

/// S_r(args) in O(2^(r/2)) products: signed splits of the arguments into two
/// halves, each half evaluated by recursion over subsets.
template <Scalar S>
Matrix<S> eval_standard(std::span<const Matrix<S>> args);

template <Scalar S>
struct IdentityReport {
    /// "standard" or "product"
    std::string identity;
    /// Arity of each standard-polynomial factor.
    std::size_t degree = 0;
    /// Number of S_degree factors multiplied together.
    std::size_t copies = 1;
    std::size_t trials = 0;
    bool exhaustive = false;
    std::size_t tuples_checked = 0;
    /// Failing argument tuples, at most a few.
    std::vector<std::vector<Matrix<S>>> failures;

    bool passed() const noexcept { return failures.empty(); }
};

/// Uniform element of the center: {-2, ..., 2} over Q, the whole field over F_p.
template <Scalar S>
typename S::Center random_center(std::mt19937_64& rng, const ScalarDomain& dom);

/// Random Z(R)-combination of the given spanning matrices.
template <Scalar S>
Matrix<S> random_combination(std::span<const Matrix<S>> span, std::mt19937_64& rng);

/// S_degree on `trials` random tuples of centralizer elements.
template <Scalar S>
IdentityReport<S> check_standard_identity(const CentralizerBasis<S>& basis, std::size_t degree, std::size_t trials,
                                          std::uint64_t seed);

/// S_degree on every increasing tuple of distinct basis elements; by
/// multilinearity and alternation this decides the identity on the span.
template <Scalar S>
IdentityReport<S> check_standard_identity_exhaustive(const CentralizerBasis<S>& basis, std::size_t degree);

/// S_{2m} with m = dim ker A, random tuples. Throws UnsupportedDomain over
/// the quaternions.
template <Scalar S>
IdentityReport<S> check_standard_identity(const Matrix<S>& a, std::size_t trials, std::uint64_t seed);

/// Product of n * v copies of S_{2p} on fresh random elements, p the
/// PI-degree, n the nilpotency index, v the number of block sizes.
template <Scalar S>
IdentityReport<S> check_product_identity(const CentralizerBasis<S>& basis, std::size_t trials, std::uint64_t seed);

template <Scalar S>
IdentityReport<S> check_product_identity(const Matrix<S>& a, std::size_t trials, std::uint64_t seed);

template <Scalar S>
struct StandardWitness {
    std::size_t degree;
    /// Realized preimages of the staircase E11, E12, E22, ..., E_{p-1,p}.
    std::vector<Matrix<S>> args;
    Matrix<S> value;
    /// The value has a nonzero coordinate outside the radical.
    bool nonzero_in_quotient;
};

/// Non-vanishing S_{2p-2} on quotient matrix-unit representatives for the
/// largest multiplicity p; nullopt when p < 2.
template <FieldScalar S>
std::optional<StandardWitness<S>> standard_nonidentity_witness(const CentralizerBasis<S>& basis);

}  // namespace cen
