#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "cen/jordan.hpp"
#include "cen/polynomial.hpp"

namespace cen {

/// m x m matrix of truncated polynomials representing a coset of N(X)/I(X):
/// entry (delta, gamma) is a residue modulo z^{k_gamma} whose coefficients
/// vanish below z^{k_{delta,gamma}}.
///
/// The indeterminate z is central; coefficients multiply in the order given,
/// so over the quaternions the product is noncommutative.
template <Scalar S>
class StructuredElement {
public:
    StructuredElement(JordanType type, ScalarDomain dom);

    static StructuredElement identity(const JordanType& type, ScalarDomain dom);
    /// c z^power E_{delta,gamma}; throws InvalidArgument outside the degree window.
    static StructuredElement monomial(const JordanType& type, ScalarDomain dom, std::size_t delta, std::size_t gamma,
                                      std::size_t power, S coefficient);

    const JordanType& type() const noexcept { return type_; }
    const ScalarDomain& domain() const noexcept { return dom_; }

    /// Coefficient of z^power in entry (delta, gamma); power < k_gamma.
    const S& coefficient(std::size_t delta, std::size_t gamma, std::size_t power) const {
        return entries_[delta * type_.blocks() + gamma].at(power);
    }
    S& coefficient(std::size_t delta, std::size_t gamma, std::size_t power) {
        return entries_[delta * type_.blocks() + gamma].at(power);
    }
    const std::vector<S>& entry(std::size_t delta, std::size_t gamma) const {
        return entries_[delta * type_.blocks() + gamma];
    }

    /// Every coefficient below z^{k_{delta,gamma}} is zero.
    bool respects_window() const;
    bool is_zero() const;

    StructuredElement& operator+=(const StructuredElement& o);
    StructuredElement& operator-=(const StructuredElement& o);
    friend StructuredElement operator+(StructuredElement a, const StructuredElement& b) { return a += b; }
    friend StructuredElement operator-(StructuredElement a, const StructuredElement& b) { return a -= b; }
    friend bool operator==(const StructuredElement& a, const StructuredElement& b) {
        return a.type_ == b.type_ && a.entries_ == b.entries_;
    }

    std::string to_string() const;

private:
    void require_compatible(const StructuredElement& o) const;

    JordanType type_;
    ScalarDomain dom_;
    std::vector<std::vector<S>> entries_;
};

/// Matrix product of polynomial entries, entry (delta, gamma) reduced
/// modulo z^{k_gamma}. Throws NotClosed if the result leaves the window.
template <Scalar S>
StructuredElement<S> operator*(const StructuredElement<S>& a, const StructuredElement<S>& b);

/// Tag (delta, gamma, i, t) of the basis element b_t z^i E_{delta,gamma}.
struct BasisTag {
    std::size_t delta;
    std::size_t gamma;
    std::size_t power;
    std::size_t center_index;
    friend bool operator==(const BasisTag&, const BasisTag&) = default;
};

template <Scalar S>
struct CentralizerBasis {
    JordanBasis<S> base;
    std::vector<BasisTag> tags;
    std::vector<StructuredElement<S>> elements;
    /// Images of `elements` as d x d matrices in the original coordinates.
    std::vector<Matrix<S>> realized;

    const JordanType& type() const noexcept { return base.type; }
};

/// Z(R)-basis of {B : AB = BA} from the homogeneous linear system in the
/// entries of B. Over the quaternions the system is written in the regular
/// representation and solved over Q.
template <Scalar S>
std::vector<Matrix<S>> brute_commutant(const Matrix<S>& a);

/// [R : Z(R)] * (k_1 + 3 k_2 + ... + (2m - 1) k_m).
std::size_t dimension_formula(const JordanType& type, const ScalarDomain& dom);

/// Tags ordered by delta, gamma, power, then center index.
std::vector<BasisTag> structured_tags(const JordanType& type, const ScalarDomain& dom);

/// The endomorphism psi_P in original coordinates: the left-scalar action
/// c . v is realized as v * conj(c) on column vectors, which makes
/// realize(P Q) = realize(Q) realize(P).
template <Scalar S>
Matrix<S> realize(const JordanBasis<S>& base, const StructuredElement<S>& p);

/// Throws NotNilpotent.
template <Scalar S>
CentralizerBasis<S> structured_basis(const Matrix<S>& a);

/// Structured form of a commuting B read off from B(x_{delta,0}); the
/// inverse of `realize`. Throws NotCommuting.
template <Scalar S>
StructuredElement<S> matrix_to_structured(const Matrix<S>& a, const JordanBasis<S>& base, const Matrix<S>& b);

template <Scalar S>
StructuredElement<S> matrix_to_structured(const Matrix<S>& a, const Matrix<S>& b);

/// For indecomposable nilpotent A over a field: f with deg f < n and
/// f(A) = B, or nullopt when AB != BA. Throws NotIndecomposable or
/// UnsupportedDomain over the quaternions.
template <Scalar S>
std::optional<Polynomial<S>> polynomial_membership(const Matrix<S>& a, const Matrix<S>& b);

template <Scalar S>
struct Contained {
    /// B = h(A); present whenever the extracted coefficients are central.
    std::optional<Polynomial<S>> h;
};

template <Scalar S>
struct NotContained {
    /// Commutes with A but not with B.
    Matrix<S> witness;
};

template <Scalar S>
using ContainmentResult = std::variant<Contained<S>, NotContained<S>>;

/// Decides Cen(A) within Cen(B) for nilpotent A. Witness candidates are the
/// block projections first, then the realized structured basis.
template <Scalar S>
ContainmentResult<S> containment_test(const Matrix<S>& a, const Matrix<S>& b);

template <Scalar S>
struct EigenBlock {
    S eigenvalue;
    std::size_t multiplicity;
    /// Columns span ker (A - lambda I)^multiplicity.
    Matrix<S> eigenspace;
    /// A - lambda I restricted to the eigenspace, in the column basis above.
    Matrix<S> nilpotent_part;
    JordanType type;
    std::size_t dimension;
};

template <Scalar S>
struct SplitCentralizer {
    std::vector<EigenBlock<S>> blocks;
    std::size_t total_dimension;
};

/// Reduction of Cen(A) to nilpotent centralizers, one per eigenvalue.
/// Throws NonSplitSpectrum or UnsupportedDomain.
template <Scalar S>
SplitCentralizer<S> split_centralizer(const Matrix<S>& a);

}  // namespace cen
