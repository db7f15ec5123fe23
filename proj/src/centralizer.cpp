#include "cen/centralizer.hpp"

#include <stdexcept>

#include "cen/instantiate.hpp"
#include "cen/spectrum.hpp"

namespace cen {

template <Scalar S>
StructuredElement<S>::StructuredElement(JordanType type, ScalarDomain dom) : type_(std::move(type)), dom_(dom) {
    const std::size_t m = type_.blocks();
    entries_.reserve(m * m);
    for (std::size_t d = 0; d < m; ++d)
        for (std::size_t g = 0; g < m; ++g) entries_.emplace_back(type_.size(g), S::zero(dom_));
}

template <Scalar S>
StructuredElement<S> StructuredElement<S>::identity(const JordanType& type, ScalarDomain dom) {
    StructuredElement e(type, dom);
    for (std::size_t g = 0; g < type.blocks(); ++g) e.coefficient(g, g, 0) = S::one(dom);
    return e;
}

template <Scalar S>
StructuredElement<S> StructuredElement<S>::monomial(const JordanType& type, ScalarDomain dom, std::size_t delta,
                                                    std::size_t gamma, std::size_t power, S coefficient) {
    if (delta >= type.blocks() || gamma >= type.blocks()) throw InvalidArgument("block index out of range");
    if (power < type.shift_gap(delta, gamma) || power >= type.size(gamma))
        throw InvalidArgument("power " + std::to_string(power) + " outside the window of entry (" +
                              std::to_string(delta) + ", " + std::to_string(gamma) + ")");
    if (coefficient.domain() != dom) throw DomainMismatch("coefficient outside " + dom.name());
    StructuredElement e(type, dom);
    e.coefficient(delta, gamma, power) = std::move(coefficient);
    return e;
}

template <Scalar S>
bool StructuredElement<S>::respects_window() const {
    const std::size_t m = type_.blocks();
    for (std::size_t d = 0; d < m; ++d)
        for (std::size_t g = 0; g < m; ++g)
            for (std::size_t i = 0; i < type_.shift_gap(d, g); ++i)
                if (!coefficient(d, g, i).is_zero()) return false;
    return true;
}

template <Scalar S>
bool StructuredElement<S>::is_zero() const {
    for (const auto& e : entries_)
        for (const auto& c : e)
            if (!c.is_zero()) return false;
    return true;
}

template <Scalar S>
void StructuredElement<S>::require_compatible(const StructuredElement& o) const {
    if (!(type_ == o.type_)) throw DimensionMismatch("structured elements of types " + type_.to_string() + " and " +
                                                     o.type_.to_string());
    if (dom_ != o.dom_) throw DomainMismatch("structured elements over different domains");
}

template <Scalar S>
StructuredElement<S>& StructuredElement<S>::operator+=(const StructuredElement& o) {
    require_compatible(o);
    for (std::size_t e = 0; e < entries_.size(); ++e)
        for (std::size_t i = 0; i < entries_[e].size(); ++i) entries_[e][i] += o.entries_[e][i];
    return *this;
}

template <Scalar S>
StructuredElement<S>& StructuredElement<S>::operator-=(const StructuredElement& o) {
    require_compatible(o);
    for (std::size_t e = 0; e < entries_.size(); ++e)
        for (std::size_t i = 0; i < entries_[e].size(); ++i) entries_[e][i] -= o.entries_[e][i];
    return *this;
}

template <Scalar S>
StructuredElement<S> operator*(const StructuredElement<S>& a, const StructuredElement<S>& b) {
    if (!(a.type() == b.type())) throw DimensionMismatch("structured product of different types");
    if (a.domain() != b.domain()) throw DomainMismatch("structured product over different domains");
    const JordanType& type = a.type();
    const std::size_t m = type.blocks();
    StructuredElement<S> out(type, a.domain());
    for (std::size_t d = 0; d < m; ++d)
        for (std::size_t t = 0; t < m; ++t) {
            const auto& p = a.entry(d, t);
            for (std::size_t g = 0; g < m; ++g) {
                const auto& q = b.entry(t, g);
                const std::size_t kg = type.size(g);
                for (std::size_t i = 0; i < p.size() && i < kg; ++i) {
                    if (p[i].is_zero()) continue;
                    for (std::size_t j = 0; i + j < kg; ++j)
                        if (!q[j].is_zero()) out.coefficient(d, g, i + j) += p[i] * q[j];
                }
            }
        }
    if (!out.respects_window()) throw NotClosed("structured product left the degree window");
    return out;
}

template <Scalar S>
std::string StructuredElement<S>::to_string() const {
    const std::size_t m = type_.blocks();
    std::string s = "[";
    for (std::size_t d = 0; d < m; ++d) {
        s += d ? ", [" : "[";
        for (std::size_t g = 0; g < m; ++g) s += (g ? ", " : "") + Polynomial<S>(dom_, entry(d, g)).to_string("z");
        s += "]";
    }
    return s + "]";
}

template <Scalar S>
std::vector<Matrix<S>> brute_commutant(const Matrix<S>& a) {
    using C = typename S::Center;
    if (!a.is_square()) throw DimensionMismatch("centralizer of a non-square matrix");
    const ScalarDomain dom = a.domain();
    const std::size_t d = a.rows();
    const auto cb = S::center_basis(dom);
    const std::size_t deg = cb.size();
    const Matrix<C> rho_a = regular_representation(a);
    const std::size_t big = d * deg;
    const ScalarDomain cdom = rho_a.domain();

    Matrix<C> system(cdom, big * big, d * d * deg);
    std::size_t col = 0;
    for (std::size_t r = 0; r < d; ++r)
        for (std::size_t s = 0; s < d; ++s)
            for (std::size_t t = 0; t < deg; ++t, ++col) {
                Matrix<S> u(dom, d, d);
                u(r, s) = cb[t];
                const Matrix<C> rho_u = regular_representation(u);
                const Matrix<C> c = rho_a * rho_u - rho_u * rho_a;
                for (std::size_t i = 0; i < big; ++i)
                    for (std::size_t j = 0; j < big; ++j) system(i * big + j, col) = c(i, j);
            }

    std::vector<Matrix<S>> out;
    for (const auto& v : nullspace(system)) {
        Matrix<S> b(dom, d, d);
        std::size_t k = 0;
        for (std::size_t r = 0; r < d; ++r)
            for (std::size_t s = 0; s < d; ++s)
                for (std::size_t t = 0; t < deg; ++t, ++k)
                    if (!v[k].is_zero()) b(r, s) += S::from_center(v[k], dom) * cb[t];
        out.push_back(std::move(b));
    }
    return out;
}

std::size_t dimension_formula(const JordanType& type, const ScalarDomain& dom) {
    std::size_t sum = 0;
    for (std::size_t j = 0; j < type.blocks(); ++j) sum += (2 * j + 1) * type.size(j);
    return dom.center_degree() * sum;
}

std::vector<BasisTag> structured_tags(const JordanType& type, const ScalarDomain& dom) {
    std::vector<BasisTag> tags;
    const std::size_t m = type.blocks();
    for (std::size_t d = 0; d < m; ++d)
        for (std::size_t g = 0; g < m; ++g)
            for (std::size_t i = type.shift_gap(d, g); i < type.size(g); ++i)
                for (std::size_t t = 0; t < dom.center_degree(); ++t) tags.push_back({d, g, i, t});
    return tags;
}

template <Scalar S>
Matrix<S> realize(const JordanBasis<S>& base, const StructuredElement<S>& p) {
    const JordanType& type = base.type;
    if (!(p.type() == type)) throw DimensionMismatch("structured element of type " + p.type().to_string());
    const ScalarDomain dom = base.change_of_base.domain();
    const std::size_t m = type.blocks();
    Matrix<S> in_base(dom, type.dimension(), type.dimension());
    for (std::size_t d = 0; d < m; ++d)
        for (std::size_t g = 0; g < m; ++g) {
            const auto& e = p.entry(d, g);
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (e[i].is_zero()) continue;
                const S c = e[i].conjugate();
                for (std::size_t j = 0; j < type.size(d) && j + i < type.size(g); ++j)
                    in_base(base.column(g, j + i), base.column(d, j)) += c;
            }
        }
    return base.change_of_base * in_base * base.inverse_change;
}

template <Scalar S>
CentralizerBasis<S> structured_basis(const Matrix<S>& a) {
    CentralizerBasis<S> out{jordan_base(a), {}, {}, {}};
    const ScalarDomain dom = a.domain();
    const auto cb = S::center_basis(dom);
    out.tags = structured_tags(out.base.type, dom);
    out.elements.reserve(out.tags.size());
    out.realized.reserve(out.tags.size());
    for (const auto& t : out.tags) {
        out.elements.push_back(StructuredElement<S>::monomial(out.base.type, dom, t.delta, t.gamma, t.power, cb[t.center_index]));
        out.realized.push_back(realize(out.base, out.elements.back()));
    }
    return out;
}

template <Scalar S>
StructuredElement<S> matrix_to_structured(const Matrix<S>& a, const JordanBasis<S>& base, const Matrix<S>& b) {
    if (!(a * b == b * a)) throw NotCommuting();
    const JordanType& type = base.type;
    StructuredElement<S> out(type, a.domain());
    for (std::size_t d = 0; d < type.blocks(); ++d) {
        const auto coords = express_in_base(base, b * base.chains[d][0]);
        for (std::size_t g = 0; g < type.blocks(); ++g)
            for (std::size_t i = 0; i < type.size(g); ++i) out.coefficient(d, g, i) = coords[g][i].conjugate();
    }
    if (!out.respects_window() || !(realize(base, out) == b))
        throw std::logic_error("commuting matrix has no consistent structured form");
    return out;
}

template <Scalar S>
StructuredElement<S> matrix_to_structured(const Matrix<S>& a, const Matrix<S>& b) {
    return matrix_to_structured(a, jordan_base(a), b);
}

template <Scalar S>
std::optional<Polynomial<S>> polynomial_membership(const Matrix<S>& a, const Matrix<S>& b) {
    if constexpr (!S::commutative) {
        throw UnsupportedDomain("polynomial membership needs a field");
    } else {
        if (!a.is_square() || a.rows() != b.rows() || !b.is_square()) throw DimensionMismatch("membership shapes");
        if (!is_indecomposable(a)) throw NotIndecomposable();
        if (!(a * b == b * a)) return std::nullopt;
        const auto base = jordan_base(a);
        const auto p = matrix_to_structured(a, base, b);
        Polynomial<S> f(a.domain(), p.entry(0, 0));
        if (!(f.evaluate(a) == b)) throw std::logic_error("membership polynomial does not reproduce B");
        return f;
    }
}

template <Scalar S>
ContainmentResult<S> containment_test(const Matrix<S>& a, const Matrix<S>& b) {
    if (!a.is_square() || !b.is_square() || a.rows() != b.rows()) throw DimensionMismatch("containment shapes");
    const auto basis = structured_basis(a);
    for (std::size_t d = 0; d < basis.type().blocks(); ++d) {
        auto eps = block_projection(basis.base, d);
        if (!(eps * b == b * eps)) return NotContained<S>{std::move(eps)};
    }
    for (const auto& x : basis.realized)
        if (!(x * b == b * x)) return NotContained<S>{x};

    Contained<S> out;
    if (basis.type().blocks() == 0) {
        out.h = Polynomial<S>(a.domain(), {});
        return out;
    }
    const auto p = matrix_to_structured(a, basis.base, b);
    const auto& coeffs = p.entry(0, 0);
    for (const auto& c : coeffs)
        if (!c.is_central()) return out;
    Polynomial<S> h(a.domain(), coeffs);
    if (!(h.evaluate(a) == b)) throw std::logic_error("containment polynomial does not reproduce B");
    out.h = std::move(h);
    return out;
}

template <Scalar S>
SplitCentralizer<S> split_centralizer(const Matrix<S>& a) {
    const ScalarDomain dom = a.domain();
    const std::size_t d = a.rows();
    SplitCentralizer<S> out{{}, 0};
    for (const auto& ev : eigen_split(a)) {
        const Matrix<S> shifted = a - scale(ev.value, Matrix<S>::identity(dom, d));
        const auto kernel = nullspace(matpow(shifted, ev.multiplicity));
        Matrix<S> space = Matrix<S>::from_columns(dom, d, kernel);
        Matrix<S> restricted(dom, kernel.size(), kernel.size());
        for (std::size_t j = 0; j < kernel.size(); ++j) {
            const auto x = solve(space, shifted * kernel[j]);
            if (!x) throw std::logic_error("generalized eigenspace is not invariant");
            for (std::size_t i = 0; i < kernel.size(); ++i) restricted(i, j) = (*x)[i];
        }
        JordanType type = jordan_base(restricted).type;
        const std::size_t dim = dimension_formula(type, dom);
        out.total_dimension += dim;
        out.blocks.push_back({ev.value, ev.multiplicity, std::move(space), std::move(restricted), std::move(type), dim});
    }
    return out;
}

#define CEN_INSTANTIATE(S)                                                                                            \
    template class StructuredElement<S>;                                                                             \
    template StructuredElement<S> operator*(const StructuredElement<S>&, const StructuredElement<S>&);               \
    template std::vector<Matrix<S>> brute_commutant(const Matrix<S>&);                                               \
    template Matrix<S> realize(const JordanBasis<S>&, const StructuredElement<S>&);                                  \
    template CentralizerBasis<S> structured_basis(const Matrix<S>&);                                                 \
    template StructuredElement<S> matrix_to_structured(const Matrix<S>&, const JordanBasis<S>&, const Matrix<S>&);   \
    template StructuredElement<S> matrix_to_structured(const Matrix<S>&, const Matrix<S>&);                          \
    template std::optional<Polynomial<S>> polynomial_membership(const Matrix<S>&, const Matrix<S>&);                 \
    template ContainmentResult<S> containment_test(const Matrix<S>&, const Matrix<S>&);                              \
    template SplitCentralizer<S> split_centralizer(const Matrix<S>&);
CEN_FOR_EACH_SCALAR(CEN_INSTANTIATE)
#undef CEN_INSTANTIATE

}  // namespace cen
