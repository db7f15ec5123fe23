#include "cen/algebra.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "cen/instantiate.hpp"

namespace cen {

std::string Monomial::to_string() const {
    std::string s = power == 0 ? "" : (power == 1 ? "z " : "z^" + std::to_string(power) + " ");
    return s + "E(" + std::to_string(row) + "," + std::to_string(col) + ")";
}

namespace {

std::size_t key(const JordanType& t, const Monomial& m) {
    return (m.row * t.blocks() + m.col) * (t.index() + 1) + m.power;
}

}  // namespace

CAPresentation::CAPresentation(JordanType type) : type_(std::move(type)) {
    const std::size_t m = type_.blocks();
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            for (std::size_t a = type_.transposed_gap(i, j); a < type_.size(i); ++a) {
                index_.emplace(key(type_, {i, j, a}), basis_.size());
                basis_.push_back({i, j, a});
            }
    const std::size_t n = basis_.size();
    table_.assign(n * n, npos);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
            const Monomial& p = basis_[x];
            const Monomial& q = basis_[y];
            if (p.col != q.row) continue;
            const std::size_t power = p.power + q.power;
            if (power >= type_.size(p.row)) continue;
            const auto idx = index_of({p.row, q.col, power});
            if (!idx) throw NotClosed("C_A product " + p.to_string() + " * " + q.to_string() + " leaves the windows");
            table_[x * n + y] = *idx;
        }
}

std::optional<std::size_t> CAPresentation::index_of(const Monomial& m) const {
    if (m.row >= type_.blocks() || m.col >= type_.blocks() || m.power > type_.index()) return std::nullopt;
    const auto it = index_.find(key(type_, m));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::vector<std::vector<std::size_t>> CAPresentation::entry_dimensions() const {
    const std::size_t m = type_.blocks();
    std::vector<std::vector<std::size_t>> out(m, std::vector<std::size_t>(m, 0));
    for (const auto& mono : basis_) ++out[mono.row][mono.col];
    return out;
}

bool CAPresentation::is_radical(std::size_t x) const {
    const Monomial& mono = basis_.at(x);
    return mono.power > 0 || type_.size(mono.row) != type_.size(mono.col);
}

CAPresentation build_ca(const JordanType& type) { return CAPresentation(type); }

std::size_t radical_nilpotency_index(const CAPresentation& ca) {
    std::set<std::size_t> rad;
    for (std::size_t x = 0; x < ca.dimension(); ++x)
        if (ca.is_radical(x)) rad.insert(x);
    std::set<std::size_t> power = rad;
    std::size_t r = 1;
    const std::size_t limit = ca.dimension() + 1;
    while (!power.empty()) {
        if (r > limit) throw std::logic_error("radical is not nilpotent");
        std::set<std::size_t> next;
        for (const auto x : power)
            for (const auto y : rad)
                if (const auto z = ca.product(x, y); z != CAPresentation::npos) next.insert(z);
        power = std::move(next);
        ++r;
    }
    return r;
}

std::vector<std::size_t> radical(const CAPresentation& ca) {
    std::vector<std::size_t> out;
    for (std::size_t x = 0; x < ca.dimension(); ++x)
        if (ca.is_radical(x)) out.push_back(x);
    for (const auto r : out)
        for (std::size_t b = 0; b < ca.dimension(); ++b)
            for (const auto z : {ca.product(r, b), ca.product(b, r)})
                if (z != CAPresentation::npos && !ca.is_radical(z))
                    throw std::logic_error("radical span is not an ideal");
    radical_nilpotency_index(ca);
    return out;
}

std::map<std::size_t, std::size_t, std::greater<>> semisimple_multiplicities(const JordanType& type) {
    return type.multiplicities();
}

std::size_t pi_degree(const JordanType& type) {
    std::size_t p = 0;
    for (const auto& [size, count] : type.multiplicities()) p = std::max(p, count);
    return p;
}

std::vector<MatrixUnitBlock> quotient_matrix_units(const CAPresentation& ca) {
    const JordanType& t = ca.type();
    std::vector<MatrixUnitBlock> out;
    for (const auto& [size, count] : t.multiplicities()) {
        MatrixUnitBlock blk{size, {}, {}};
        for (std::size_t i = 0; i < t.blocks(); ++i)
            if (t.size(i) == size) blk.blocks.push_back(i);
        for (const auto a : blk.blocks)
            for (const auto b : blk.blocks) {
                const auto idx = ca.index_of({a, b, 0});
                if (!idx) throw std::logic_error("missing degree-zero unit between equal blocks");
                blk.units.push_back(*idx);
            }
        out.push_back(std::move(blk));
    }
    return out;
}

bool verify_matrix_units(const CAPresentation& ca, const std::vector<MatrixUnitBlock>& units) {
    for (std::size_t s = 0; s < units.size(); ++s) {
        const auto& u = units[s];
        const std::size_t p = u.multiplicity();
        for (std::size_t a = 0; a < p; ++a)
            for (std::size_t b = 0; b < p; ++b) {
                if (ca.is_radical(u.unit(a, b))) return false;
                for (std::size_t c = 0; c < p; ++c)
                    for (std::size_t d = 0; d < p; ++d) {
                        const std::size_t expect = b == c ? u.unit(a, d) : CAPresentation::npos;
                        if (ca.product(u.unit(a, b), u.unit(c, d)) != expect) return false;
                    }
                for (std::size_t s2 = 0; s2 < units.size(); ++s2) {
                    if (s2 == s) continue;
                    for (const auto v : units[s2].units)
                        if (ca.product(u.unit(a, b), v) != CAPresentation::npos) return false;
                }
            }
    }
    return true;
}

template <FieldScalar S>
std::size_t trace_form_radical_oracle(std::span<const Matrix<S>> basis) {
    const std::size_t n = basis.size();
    if (n == 0) return 0;
    const ScalarDomain dom = basis[0].domain();
    if (dom.kind() == DomainKind::prime_field && dom.modulus() <= n)
        throw UnsupportedDomain("trace form needs characteristic above the dimension");
    const std::size_t d = basis[0].rows();
    const std::size_t dd = d * d;

    Matrix<S> aug(dom, dd, n + dd);
    for (std::size_t c = 0; c < n; ++c) {
        if (basis[c].rows() != d || basis[c].cols() != d) throw DimensionMismatch("basis matrices differ in shape");
        for (std::size_t k = 0; k < dd; ++k) aug(k, c) = basis[c](k / d, k % d);
    }
    for (std::size_t k = 0; k < dd; ++k) aug(k, n + k) = S::one(dom);
    const auto red = rref(aug);
    for (std::size_t c = 0; c < n; ++c)
        if (c >= red.pivots.size() || red.pivots[c] != c) throw InvalidArgument("basis is linearly dependent");
    // Rows n.. of the transform annihilate the span.
    const Matrix<S> annihilator = red.reduced.block(n, n, dd - n, dd);

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Matrix<S> prod = basis[i] * basis[j];
            for (std::size_t r = 0; r < annihilator.rows(); ++r) {
                S acc = S::zero(dom);
                for (std::size_t k = 0; k < dd; ++k) {
                    const S& v = prod(k / d, k % d);
                    if (!v.is_zero() && !annihilator(r, k).is_zero()) acc += annihilator(r, k) * v;
                }
                if (!acc.is_zero()) throw NotClosed("span is not closed under multiplication");
            }
        }

    Matrix<S> gram(dom, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            S tr = S::zero(dom);
            for (std::size_t k = 0; k < d; ++k)
                for (std::size_t l = 0; l < d; ++l)
                    if (!basis[i](k, l).is_zero() && !basis[j](l, k).is_zero()) tr += basis[i](k, l) * basis[j](l, k);
            gram(i, j) = tr;
        }
    return n - rank(gram);
}

template <FieldScalar S>
Matrix<S> realize_ca(const JordanBasis<S>& base, const CAPresentation& ca, const Vector<S>& coords) {
    if (!(base.type == ca.type())) throw DimensionMismatch("Jordan base and C_A of different types");
    if (coords.size() != ca.dimension()) throw DimensionMismatch("C_A coordinate length");
    const ScalarDomain dom = base.change_of_base.domain();
    StructuredElement<S> p(ca.type(), dom);
    for (std::size_t x = 0; x < coords.size(); ++x) {
        const Monomial& m = ca.basis()[x];
        p.coefficient(m.col, m.row, m.power) = coords[x];
    }
    return realize(base, p);
}

template <FieldScalar S>
Vector<S> ca_coordinates(const CAPresentation& ca, const StructuredElement<S>& p) {
    if (!(p.type() == ca.type())) throw DimensionMismatch("structured element of another type");
    Vector<S> out;
    out.reserve(ca.dimension());
    for (const auto& m : ca.basis()) out.push_back(p.coefficient(m.col, m.row, m.power));
    return out;
}

StructureReport structure_report(const JordanType& type) {
    const CAPresentation ca(type);
    const auto rad = radical(ca);
    const auto mult = semisimple_multiplicities(type);
    StructureReport r{type, ca.dimension(), rad.size(), {}, mult, mult.size(), type.index(), 0, 0, pi_degree(type), false};
    for (const auto x : rad) r.radical_basis.push_back(ca.basis()[x]);
    r.radical_nilpotency = radical_nilpotency_index(ca);
    r.nilpotency_bound = type.index() * mult.size();
    r.matrix_units_verified = verify_matrix_units(ca, quotient_matrix_units(ca));
    return r;
}

#define CEN_INSTANTIATE(S)                                                                            \
    template std::size_t trace_form_radical_oracle(std::span<const Matrix<S>>);                      \
    template Matrix<S> realize_ca(const JordanBasis<S>&, const CAPresentation&, const Vector<S>&);   \
    template Vector<S> ca_coordinates(const CAPresentation&, const StructuredElement<S>&);
CEN_FOR_EACH_FIELD(CEN_INSTANTIATE)
#undef CEN_INSTANTIATE

}  // namespace cen
