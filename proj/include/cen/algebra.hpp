#pragma once

#include <cstddef>
#include <limits>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cen/centralizer.hpp"

namespace cen {

/// z^power E_{row,col} in C_A.
struct Monomial {
    std::size_t row;
    std::size_t col;
    std::size_t power;
    friend bool operator==(const Monomial&, const Monomial&) = default;
    std::string to_string() const;
};

/// C_A = sum z^{l_{i,j}} T_i E_{i,j} with T_i = K[z]/(z^{k_i}), presented by
/// its monomial basis and multiplication table. Built for a field K; the
/// table itself does not depend on K.
class CAPresentation {
public:
    static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

    /// Throws NotClosed if a product of basis monomials leaves the span.
    explicit CAPresentation(JordanType type);

    const JordanType& type() const noexcept { return type_; }
    /// Ordered by row, then column, then power.
    const std::vector<Monomial>& basis() const noexcept { return basis_; }
    std::size_t dimension() const noexcept { return basis_.size(); }
    std::optional<std::size_t> index_of(const Monomial& m) const;

    /// Basis index of the product of monomials x and y, or npos if it is zero.
    std::size_t product(std::size_t x, std::size_t y) const { return table_[x * basis_.size() + y]; }

    /// Number of basis monomials in entry (i, j), i.e. k_i - l_{i,j}.
    std::vector<std::vector<std::size_t>> entry_dimensions() const;

    /// Monomials of positive degree, or of degree zero between blocks of different sizes.
    bool is_radical(std::size_t x) const;

    template <FieldScalar S>
    Vector<S> multiply(const Vector<S>& x, const Vector<S>& y) const {
        const ScalarDomain dom = x.at(0).domain();
        Vector<S> out(basis_.size(), S::zero(dom));
        for (std::size_t a = 0; a < basis_.size(); ++a) {
            if (x[a].is_zero()) continue;
            for (std::size_t b = 0; b < basis_.size(); ++b) {
                const std::size_t c = product(a, b);
                if (c != npos && !y[b].is_zero()) out[c] += x[a] * y[b];
            }
        }
        return out;
    }

private:
    JordanType type_;
    std::vector<Monomial> basis_;
    std::map<std::size_t, std::size_t> index_;
    std::vector<std::size_t> table_;
};

CAPresentation build_ca(const JordanType& type);

/// Basis indices of the radical. Throws std::logic_error if the span is not a
/// nilpotent two-sided ideal.
std::vector<std::size_t> radical(const CAPresentation& ca);

/// Least r with J^r = 0, computed on monomial spans.
std::size_t radical_nilpotency_index(const CAPresentation& ca);

/// Block size e -> p_e, largest size first.
std::map<std::size_t, std::size_t, std::greater<>> semisimple_multiplicities(const JordanType& type);

/// max p_e; 0 for the empty type.
std::size_t pi_degree(const JordanType& type);

/// Degree-zero monomials E_{i_a,i_b} for the blocks i_0 < ... of one size e;
/// their classes form matrix units of the M_{p_e}(K) summand of C_A / J.
struct MatrixUnitBlock {
    std::size_t size;
    std::vector<std::size_t> blocks;
    /// units[a * p + b] is the basis index of E_{ab}.
    std::vector<std::size_t> units;

    std::size_t multiplicity() const noexcept { return blocks.size(); }
    std::size_t unit(std::size_t a, std::size_t b) const { return units.at(a * blocks.size() + b); }
};

std::vector<MatrixUnitBlock> quotient_matrix_units(const CAPresentation& ca);

/// E_{ab} E_{cd} = delta_{bc} E_{ad} exactly, units of different blocks
/// multiply to zero, and none of them lies in the radical.
bool verify_matrix_units(const CAPresentation& ca, const std::vector<MatrixUnitBlock>& units);

/// Dimension of {x : tr(xy) = 0 for all y} inside the span of `basis`, which
/// must be linearly independent and closed under multiplication (NotClosed
/// otherwise). Only meaningful in characteristic 0 or above the dimension;
/// throws UnsupportedDomain for F_p with p <= basis size.
template <FieldScalar S>
std::size_t trace_form_radical_oracle(std::span<const Matrix<S>> basis);

/// Image of the C_A element with the given coordinates in Cen(A): the
/// transposed structured element realized through the Jordan base.
template <FieldScalar S>
Matrix<S> realize_ca(const JordanBasis<S>& base, const CAPresentation& ca, const Vector<S>& coords);

/// Inverse of realize_ca on structured elements.
template <FieldScalar S>
Vector<S> ca_coordinates(const CAPresentation& ca, const StructuredElement<S>& p);

struct StructureReport {
    JordanType type;
    std::size_t total_dim;
    std::size_t radical_dim;
    std::vector<Monomial> radical_basis;
    std::map<std::size_t, std::size_t, std::greater<>> multiplicities;
    /// Sizes e with p_e > 0.
    std::size_t distinct_sizes;
    /// n, the nilpotency index of A.
    std::size_t index;
    std::size_t radical_nilpotency;
    /// n * v
    std::size_t nilpotency_bound;
    std::size_t pi_degree;
    bool matrix_units_verified;
};

StructureReport structure_report(const JordanType& type);

}  // namespace cen
