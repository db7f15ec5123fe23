#include "cen/spectrum.hpp"

#include <algorithm>
#include <map>

#include "cen/instantiate.hpp"

namespace cen {
namespace {

template <Scalar S>
Vector<S> flatten(const Matrix<S>& m) {
    return {m.data().begin(), m.data().end()};
}

// Synthetic division by (z - r); returns the quotient if r is a root.
template <FieldScalar S>
std::optional<Polynomial<S>> deflate(const Polynomial<S>& f, const S& r) {
    const auto& c = f.coefficients();
    if (c.size() < 2) return std::nullopt;
    std::vector<S> q(c.size() - 1, S::zero(f.domain()));
    S carry = S::zero(f.domain());
    for (std::size_t k = c.size(); k-- > 1;) {
        carry = c[k] + carry * r;
        q[k - 1] = carry;
    }
    if (!(c[0] + carry * r).is_zero()) return std::nullopt;
    return Polynomial<S>(f.domain(), std::move(q));
}

// ----------------------------------------------------------------- F_p roots

std::vector<ModP> distinct_roots_mod_p(const Polynomial<ModP>& f) {
    const ScalarDomain dom = f.domain();
    const std::uint32_t p = dom.modulus();
    std::vector<ModP> roots;
    if (f.degree() <= 0) return roots;
    if (p <= 100000) {
        for (std::uint32_t a = 0; a < p; ++a) {
            const ModP x = ModP::raw(a, p);
            if (f.evaluate(x).is_zero()) roots.push_back(x);
        }
        return roots;
    }
    // Product of the distinct linear factors, then equal-degree splitting.
    const auto z = Polynomial<ModP>::variable(dom);
    auto g = gcd(f, powmod(z, p, f) - z);
    std::vector<Polynomial<ModP>> work{g};
    std::uint32_t shift = 1;
    while (!work.empty()) {
        auto h = work.back();
        work.pop_back();
        if (h.degree() <= 0) continue;
        if (h.degree() == 1) {
            roots.push_back(-(h.coefficient(0) * h.leading().inverse()));
            continue;
        }
        // (z + a)^((p-1)/2) - 1 separates quadratic residues from nonresidues.
        const auto lin = z + Polynomial<ModP>::constant(dom, ModP(shift++, p));
        const auto split = gcd(h, powmod(lin, (p - 1) / 2, h) - Polynomial<ModP>::constant(dom, ModP::one(dom)));
        if (split.degree() <= 0 || split.degree() == h.degree()) {
            work.push_back(h);
            continue;
        }
        work.push_back(split);
        work.push_back(divmod(h, split).first);
    }
    std::sort(roots.begin(), roots.end(), [](const ModP& a, const ModP& b) { return a.value() < b.value(); });
    return roots;
}

// ----------------------------------------------------------------- Q roots

std::vector<mpz_class> divisors(mpz_class n) {
    n = abs(n);
    std::map<mpz_class, unsigned> factors;
    for (mpz_class q = 2; q * q <= n && q <= 1000000; ++q)
        while (n % q == 0) {
            ++factors[q];
            n /= q;
        }
    if (n > 1) {
        if (n > mpz_class("1000000000000") && mpz_probab_prime_p(n.get_mpz_t(), 30) == 0)
            throw UnsupportedDomain("coefficient too large for rational root search");
        ++factors[n];
    }
    std::vector<mpz_class> divs{1};
    for (const auto& [q, e] : factors) {
        const std::size_t base = divs.size();
        mpz_class power = 1;
        for (unsigned k = 0; k < e; ++k) {
            power *= q;
            for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * power);
        }
    }
    return divs;
}

std::vector<Rational> distinct_roots_rational(const Polynomial<Rational>& f) {
    std::vector<Rational> roots;
    if (f.degree() <= 0) return roots;
    // Clear denominators: integer coefficients with the same roots.
    mpz_class den = 1;
    for (const auto& c : f.coefficients()) den = lcm(den, mpz_class(c.value().get_den()));
    std::vector<mpz_class> ints;
    for (const auto& c : f.coefficients()) ints.emplace_back(mpz_class(c.value() * den));
    std::size_t low = 0;
    while (ints[low] == 0) ++low;
    if (low > 0) roots.emplace_back(0);
    if (low + 1 == ints.size()) return roots;
    for (const auto& u : divisors(ints[low]))
        for (const auto& v : divisors(ints.back()))
            for (int s : {1, -1}) {
                const Rational r(mpq_class(s * u, v));
                if (r.value().get_den() != v) continue;  // not in lowest terms; seen elsewhere
                if (f.evaluate(r).is_zero()) roots.push_back(r);
            }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

}  // namespace

template <Scalar S>
Polynomial<S> minimal_polynomial(const Matrix<S>& a) {
    if constexpr (!S::commutative) {
        throw UnsupportedDomain("minimal polynomial requires a field");
    } else {
        if (!a.is_square()) throw ShapeError("minimal polynomial of a non-square matrix");
        const ScalarDomain dom = a.domain();
        const std::size_t n = a.rows();
        std::vector<Vector<S>> powers{flatten(Matrix<S>::identity(dom, n))};
        Matrix<S> power = Matrix<S>::identity(dom, n);
        for (std::size_t k = 1; k <= n; ++k) {
            power = power * a;
            const auto lower = Matrix<S>::from_columns(dom, n * n, powers);
            if (auto c = solve(lower, flatten(power))) {
                std::vector<S> coeffs(k + 1, S::zero(dom));
                for (std::size_t i = 0; i < k; ++i) coeffs[i] = -(*c)[i];
                coeffs[k] = S::one(dom);
                return {dom, std::move(coeffs)};
            }
            powers.push_back(flatten(power));
        }
        throw Error("no annihilating polynomial of degree <= n");  // Cayley-Hamilton forbids this
    }
}

template <Scalar S>
Polynomial<S> characteristic_polynomial(const Matrix<S>& a) {
    if constexpr (!S::commutative) {
        throw UnsupportedDomain("characteristic polynomial requires a field");
    } else {
        if (!a.is_square()) throw ShapeError("characteristic polynomial of a non-square matrix");
        const std::size_t n = a.rows();
        if (n > kMaxSpectrumSize) throw InvalidArgument("characteristic polynomial limited to size 16");
        const ScalarDomain dom = a.domain();
        Matrix<S> h = a;
        // Similarity transform to upper Hessenberg form.
        for (std::size_t c = 0; c + 2 < n; ++c) {
            std::size_t r = c + 1;
            while (r < n && h(r, c).is_zero()) ++r;
            if (r == n) continue;
            if (r != c + 1) {
                h.swap_rows(r, c + 1);
                for (std::size_t i = 0; i < n; ++i) std::swap(h(i, r), h(i, c + 1));
            }
            const S piv_inv = h(c + 1, c).inverse();
            for (std::size_t i = c + 2; i < n; ++i) {
                if (h(i, c).is_zero()) continue;
                const S u = h(i, c) * piv_inv;
                for (std::size_t j = 0; j < n; ++j) h(i, j) -= u * h(c + 1, j);
                for (std::size_t j = 0; j < n; ++j) h(j, c + 1) += u * h(j, i);
            }
        }
        const auto z = Polynomial<S>::variable(dom);
        std::vector<Polynomial<S>> p{Polynomial<S>::constant(dom, S::one(dom))};
        for (std::size_t k = 1; k <= n; ++k) {
            const std::size_t c = k - 1;
            Polynomial<S> next = (z - Polynomial<S>::constant(dom, h(c, c))) * p[c];
            S t = S::one(dom);
            for (std::size_t r = c; r-- > 0;) {
                t = t * h(r + 1, r);
                next -= Polynomial<S>::constant(dom, h(r, c) * t) * p[r];
            }
            p.push_back(std::move(next));
        }
        return p.back();
    }
}

template <Scalar S>
std::vector<Eigenvalue<S>> linear_factors(const Polynomial<S>& f) {
    if constexpr (!S::commutative) {
        throw UnsupportedDomain("root finding requires a field");
    } else {
        std::vector<S> roots;
        if constexpr (std::is_same_v<S, ModP>) roots = distinct_roots_mod_p(f);
        else roots = distinct_roots_rational(f);
        std::vector<Eigenvalue<S>> out;
        Polynomial<S> rest = f;
        for (const auto& r : roots) {
            std::size_t mult = 0;
            while (auto q = deflate(rest, r)) {
                rest = std::move(*q);
                ++mult;
            }
            out.push_back({r, mult});
        }
        if (rest.degree() > 0) throw NonSplitSpectrum(make_monic(rest).to_string());
        return out;
    }
}

template <Scalar S>
std::vector<Eigenvalue<S>> eigen_split(const Matrix<S>& a) {
    if constexpr (!S::commutative) {
        throw UnsupportedDomain("eigenvalue splitting requires a field");
    } else {
        return linear_factors(characteristic_polynomial(a));
    }
}

#define CEN_INSTANTIATE(S)                                                     \
    template Polynomial<S> minimal_polynomial(const Matrix<S>&);               \
    template Polynomial<S> characteristic_polynomial(const Matrix<S>&);        \
    template std::vector<Eigenvalue<S>> linear_factors(const Polynomial<S>&);  \
    template std::vector<Eigenvalue<S>> eigen_split(const Matrix<S>&);
CEN_FOR_EACH_SCALAR(CEN_INSTANTIATE)
#undef CEN_INSTANTIATE

}  // namespace cen
