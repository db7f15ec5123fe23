#include "cen/pi.hpp"

#include <algorithm>
#include <numeric>

#include "cen/instantiate.hpp"

namespace cen {

namespace {

template <Scalar S>
S integer_scalar(long v, const ScalarDomain& dom) {
    if constexpr (std::is_same_v<typename S::Center, ModP>)
        return S::from_center(ModP(v, dom.modulus()), dom);
    else
        return S::from_center(Rational(v), dom);
}

template <Scalar S>
void require_uniform(std::span<const Matrix<S>> args) {
    if (args.empty()) return;
    for (const auto& x : args) {
        if (!x.is_square() || x.rows() != args[0].rows()) throw DimensionMismatch("arguments differ in shape");
        if (x.domain() != args[0].domain()) throw DomainMismatch("arguments over different domains");
    }
}

int parity(std::size_t x) { return static_cast<int>(x & 1U); }

}  // namespace

MultilinearPoly MultilinearPoly::standard(std::size_t r) {
    MultilinearPoly f;
    f.arity = r;
    std::vector<std::size_t> perm(r);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        std::size_t inversions = 0;
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = i + 1; j < r; ++j) inversions += perm[i] > perm[j];
        f.terms.push_back({parity(inversions) ? -1L : 1L, perm});
    } while (std::next_permutation(perm.begin(), perm.end()));
    return f;
}

template <Scalar S>
Matrix<S> eval_poly(const MultilinearPoly& f, std::span<const Matrix<S>> args) {
    if (args.size() != f.arity) throw DimensionMismatch("polynomial arity " + std::to_string(f.arity));
    if (args.empty()) throw InvalidArgument("cannot evaluate a polynomial of arity 0 without a size");
    require_uniform(args);
    const ScalarDomain dom = args[0].domain();
    const std::size_t d = args[0].rows();
    Matrix<S> out(dom, d, d);
    for (const auto& t : f.terms) {
        if (t.perm.size() != f.arity) throw InvalidArgument("term of wrong length");
        Matrix<S> prod = args[t.perm[0]];
        for (std::size_t k = 1; k < t.perm.size(); ++k) prod = prod * args[t.perm[k]];
        out += scale(integer_scalar<S>(t.coefficient, dom), std::move(prod));
    }
    return out;
}

template <Scalar S>
Matrix<S> eval_standard(std::span<const Matrix<S>> args) {
    const std::size_t r = args.size();
    if (r == 0) throw InvalidArgument("S_0 has no size");
    if (r > 24) throw InvalidArgument("standard polynomial arity too large");
    require_uniform(args);
    const ScalarDomain dom = args[0].domain();
    const std::size_t d = args[0].rows();
    const std::size_t half = r / 2;
    const std::size_t full = std::size_t{1} << r;

    // table[T] = S_|T| on the arguments indexed by T, in increasing order.
    std::vector<std::optional<Matrix<S>>> table(full);
    table[0] = Matrix<S>::identity(dom, d);
    std::vector<std::size_t> by_size(full);
    for (std::size_t t = 1; t < full; ++t) by_size[t] = static_cast<std::size_t>(__builtin_popcountll(t));
    const std::size_t top = r - half;
    for (std::size_t size = 1; size <= top; ++size)
        for (std::size_t t = 1; t < full; ++t) {
            if (by_size[t] != size) continue;
            Matrix<S> acc(dom, d, d);
            std::size_t rank = 0;
            for (std::size_t i = 0; i < r; ++i) {
                if (!(t >> i & 1U)) continue;
                Matrix<S> term = args[i] * *table[t & ~(std::size_t{1} << i)];
                if (parity(rank)) acc -= term;
                else acc += term;
                ++rank;
            }
            table[t] = std::move(acc);
        }
    if (half == 0) return *table[full - 1];

    // S_r = sum over |T| = half of sign(T) S(x_T) S(x_{T^c}).
    Matrix<S> out(dom, d, d);
    const std::size_t offset = half * (half - 1) / 2;
    for (std::size_t t = 1; t < full; ++t) {
        if (by_size[t] != half) continue;
        std::size_t positions = 0;
        for (std::size_t i = 0; i < r; ++i)
            if (t >> i & 1U) positions += i;
        Matrix<S> term = *table[t] * *table[(full - 1) & ~t];
        if (parity(positions - offset)) out -= term;
        else out += term;
    }
    return out;
}

template <Scalar S>
typename S::Center random_center(std::mt19937_64& rng, const ScalarDomain& dom) {
    if constexpr (std::is_same_v<typename S::Center, ModP>) {
        const std::uint32_t p = dom.modulus();
        return ModP::raw(rng() % p, p);
    } else {
        (void)dom;
        return Rational(static_cast<long>(rng() % 5) - 2);
    }
}

template <Scalar S>
Matrix<S> random_combination(std::span<const Matrix<S>> span, std::mt19937_64& rng) {
    if (span.empty()) throw InvalidArgument("empty spanning set");
    const ScalarDomain dom = span[0].domain();
    Matrix<S> out(dom, span[0].rows(), span[0].cols());
    for (const auto& x : span) {
        const auto c = random_center<S>(rng, dom);
        if (!c.is_zero()) out += scale(S::from_center(c, dom), x);
    }
    return out;
}

namespace {

constexpr std::size_t kMaxRecordedFailures = 3;

template <Scalar S>
void require_commutative(const char* what) {
    if constexpr (!S::commutative) throw UnsupportedDomain(std::string(what) + " needs a commutative scalar domain");
}

}  // namespace

template <Scalar S>
IdentityReport<S> check_standard_identity(const CentralizerBasis<S>& basis, std::size_t degree, std::size_t trials,
                                          std::uint64_t seed) {
    require_commutative<S>("the standard identity check");
    if (degree == 0) throw InvalidArgument("degree must be positive");
    IdentityReport<S> rep;
    rep.identity = "standard";
    rep.degree = degree;
    rep.trials = trials;
    if (basis.realized.empty()) return rep;
    std::mt19937_64 rng(seed);
    const std::span<const Matrix<S>> span(basis.realized);
    for (std::size_t t = 0; t < trials; ++t) {
        std::vector<Matrix<S>> args;
        args.reserve(degree);
        for (std::size_t k = 0; k < degree; ++k) args.push_back(random_combination(span, rng));
        ++rep.tuples_checked;
        if (!eval_standard(std::span<const Matrix<S>>(args)).is_zero() && rep.failures.size() < kMaxRecordedFailures)
            rep.failures.push_back(std::move(args));
    }
    return rep;
}

template <Scalar S>
IdentityReport<S> check_standard_identity_exhaustive(const CentralizerBasis<S>& basis, std::size_t degree) {
    require_commutative<S>("the standard identity check");
    if (degree == 0) throw InvalidArgument("degree must be positive");
    IdentityReport<S> rep;
    rep.identity = "standard";
    rep.degree = degree;
    rep.exhaustive = true;
    const auto& span = basis.realized;
    const std::size_t n = span.size();
    if (degree > n) return rep;
    std::vector<std::size_t> idx(degree);
    std::iota(idx.begin(), idx.end(), 0);
    std::vector<Matrix<S>> args;
    while (true) {
        args.clear();
        for (const auto i : idx) args.push_back(span[i]);
        ++rep.tuples_checked;
        if (!eval_standard(std::span<const Matrix<S>>(args)).is_zero() && rep.failures.size() < kMaxRecordedFailures)
            rep.failures.push_back(args);
        std::size_t k = degree;
        while (k > 0 && idx[k - 1] == n - degree + k - 1) --k;
        if (k == 0) break;
        ++idx[k - 1];
        for (std::size_t j = k; j < degree; ++j) idx[j] = idx[j - 1] + 1;
    }
    return rep;
}

template <Scalar S>
IdentityReport<S> check_standard_identity(const Matrix<S>& a, std::size_t trials, std::uint64_t seed) {
    require_commutative<S>("the standard identity check");
    const auto basis = structured_basis(a);
    return check_standard_identity(basis, 2 * basis.type().blocks(), trials, seed);
}

template <Scalar S>
IdentityReport<S> check_product_identity(const CentralizerBasis<S>& basis, std::size_t trials, std::uint64_t seed) {
    require_commutative<S>("the product identity check");
    const JordanType& type = basis.type();
    IdentityReport<S> rep;
    rep.identity = "product";
    rep.degree = 2 * pi_degree(type);
    rep.copies = type.index() * type.distinct_sizes();
    rep.trials = trials;
    if (basis.realized.empty()) return rep;
    std::mt19937_64 rng(seed);
    const std::span<const Matrix<S>> span(basis.realized);
    for (std::size_t t = 0; t < trials; ++t) {
        std::vector<Matrix<S>> args;
        args.reserve(rep.degree * rep.copies);
        std::optional<Matrix<S>> prod;
        for (std::size_t c = 0; c < rep.copies; ++c) {
            const std::size_t first = args.size();
            for (std::size_t k = 0; k < rep.degree; ++k) args.push_back(random_combination(span, rng));
            const Matrix<S> value = eval_standard(std::span<const Matrix<S>>(args).subspan(first, rep.degree));
            prod = prod ? *prod * value : value;
        }
        ++rep.tuples_checked;
        if (!prod->is_zero() && rep.failures.size() < kMaxRecordedFailures) rep.failures.push_back(std::move(args));
    }
    return rep;
}

template <Scalar S>
IdentityReport<S> check_product_identity(const Matrix<S>& a, std::size_t trials, std::uint64_t seed) {
    require_commutative<S>("the product identity check");
    return check_product_identity(structured_basis(a), trials, seed);
}

template <FieldScalar S>
std::optional<StandardWitness<S>> standard_nonidentity_witness(const CentralizerBasis<S>& basis) {
    const JordanType& type = basis.type();
    const std::size_t p = pi_degree(type);
    if (p < 2) return std::nullopt;
    const CAPresentation ca(type);
    const auto blocks = quotient_matrix_units(ca);
    const auto it = std::find_if(blocks.begin(), blocks.end(), [&](const auto& b) { return b.multiplicity() == p; });
    const ScalarDomain dom = basis.base.change_of_base.domain();

    auto unit_matrix = [&](std::size_t a, std::size_t b) {
        Vector<S> coords(ca.dimension(), S::zero(dom));
        coords[it->unit(a, b)] = S::one(dom);
        return realize_ca(basis.base, ca, coords);
    };
    StandardWitness<S> w{2 * p - 2, {}, Matrix<S>(dom, 0, 0), false};
    for (std::size_t a = 0; a + 1 < p; ++a) {
        w.args.push_back(unit_matrix(a, a));
        w.args.push_back(unit_matrix(a, a + 1));
    }
    w.value = eval_standard(std::span<const Matrix<S>>(w.args));
    const Matrix<S> a_mat = basis.base.change_of_base * shift_matrix<S>(type, dom) * basis.base.inverse_change;
    const auto coords = ca_coordinates(ca, matrix_to_structured(a_mat, basis.base, w.value));
    for (std::size_t x = 0; x < coords.size(); ++x)
        if (!coords[x].is_zero() && !ca.is_radical(x)) w.nonzero_in_quotient = true;
    return w;
}

#define CEN_INSTANTIATE(S)                                                                                         \
    template Matrix<S> eval_poly(const MultilinearPoly&, std::span<const Matrix<S>>);                            \
    template Matrix<S> eval_standard(std::span<const Matrix<S>>);                                                 \
    template typename S::Center random_center<S>(std::mt19937_64&, const ScalarDomain&);                          \
    template Matrix<S> random_combination(std::span<const Matrix<S>>, std::mt19937_64&);                          \
    template IdentityReport<S> check_standard_identity(const CentralizerBasis<S>&, std::size_t, std::size_t,      \
                                                       std::uint64_t);                                             \
    template IdentityReport<S> check_standard_identity_exhaustive(const CentralizerBasis<S>&, std::size_t);       \
    template IdentityReport<S> check_standard_identity(const Matrix<S>&, std::size_t, std::uint64_t);             \
    template IdentityReport<S> check_product_identity(const CentralizerBasis<S>&, std::size_t, std::uint64_t);    \
    template IdentityReport<S> check_product_identity(const Matrix<S>&, std::size_t, std::uint64_t);
CEN_FOR_EACH_SCALAR(CEN_INSTANTIATE)
#undef CEN_INSTANTIATE

#define CEN_INSTANTIATE_FIELD(S) \
    template std::optional<StandardWitness<S>> standard_nonidentity_witness(const CentralizerBasis<S>&);
CEN_FOR_EACH_FIELD(CEN_INSTANTIATE_FIELD)
#undef CEN_INSTANTIATE_FIELD

}  // namespace cen
