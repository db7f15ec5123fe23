#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cen/matrix.hpp"

namespace cen {

/// Dense univariate polynomial in a central indeterminate z, coefficients
/// stored from the constant term upwards and kept trimmed.
template <Scalar S>
class Polynomial {
public:
    explicit Polynomial(ScalarDomain dom) : dom_(dom) {}
    Polynomial(ScalarDomain dom, std::vector<S> coeffs) : dom_(dom), c_(std::move(coeffs)) { trim(); }

    static Polynomial constant(ScalarDomain dom, S c) { return {dom, {std::move(c)}}; }
    static Polynomial monomial(ScalarDomain dom, S c, std::size_t deg) {
        std::vector<S> v(deg + 1, S::zero(dom));
        v[deg] = std::move(c);
        return {dom, std::move(v)};
    }
    static Polynomial variable(ScalarDomain dom) { return monomial(dom, S::one(dom), 1); }

    const ScalarDomain& domain() const noexcept { return dom_; }
    long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    const std::vector<S>& coefficients() const noexcept { return c_; }
    S coefficient(std::size_t i) const { return i < c_.size() ? c_[i] : S::zero(dom_); }
    const S& leading() const { return c_.back(); }
    bool is_monic() const { return !c_.empty() && c_.back() == S::one(dom_); }

    /// Residue modulo z^n.
    Polynomial truncated(std::size_t n) const {
        if (c_.size() <= n) return *this;
        return {dom_, std::vector<S>(c_.begin(), c_.begin() + static_cast<long>(n))};
    }

    Polynomial& operator+=(const Polynomial& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), S::zero(dom_));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), S::zero(dom_));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return Polynomial(a.dom_);
        std::vector<S> v(a.c_.size() + b.c_.size() - 1, S::zero(a.dom_));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
        return {a.dom_, std::move(v)};
    }
    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.dom_ == b.dom_ && a.c_ == b.c_; }

    /// Horner evaluation at a scalar (meaningful for commutative domains).
    S evaluate(const S& x) const {
        S r = S::zero(dom_);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
        return r;
    }

    /// f(A) = sum c_i A^i; coefficients must be central.
    Matrix<S> evaluate(const Matrix<S>& a) const {
        if (!a.is_square()) throw DimensionMismatch("polynomial of a non-square matrix");
        const auto id = Matrix<S>::identity(a.domain(), a.rows());
        Matrix<S> r(a.domain(), a.rows(), a.cols());
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * a + scale(*it, id);
        return r;
    }

    std::string to_string(std::string_view var = "z") const {
        if (c_.empty()) return "0";
        std::string s;
        for (std::size_t k = c_.size(); k-- > 0;) {
            if (c_[k].is_zero()) continue;
            std::string coef = c_[k].to_string();
            bool negative = false;
            if constexpr (std::is_same_v<S, Rational>) {
                negative = c_[k].sign() < 0;
                if (negative) coef = (-c_[k]).to_string();
            }
            if (!s.empty()) s += negative ? " - " : " + ";
            else if (negative) s += "-";
            const std::string mono = k == 0 ? "" : (k == 1 ? std::string(var) : std::string(var) + "^" + std::to_string(k));
            if (k == 0) s += coef;
            else if (coef == "1") s += mono;
            else s += coef + "*" + mono;
        }
        return s;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    ScalarDomain dom_;
    std::vector<S> c_;
};

/// Quotient and remainder over a field.
template <FieldScalar S>
std::pair<Polynomial<S>, Polynomial<S>> divmod(const Polynomial<S>& a, const Polynomial<S>& b) {
    if (b.is_zero()) throw ZeroInverse();
    const ScalarDomain dom = a.domain();
    std::vector<S> r = a.coefficients();
    const auto& bc = b.coefficients();
    const std::size_t db = bc.size() - 1;
    if (r.size() < bc.size()) return {Polynomial<S>(dom), a};
    std::vector<S> q(r.size() - db, S::zero(dom));
    const S lead_inv = b.leading().inverse();
    for (std::size_t k = r.size(); k-- > db;) {
        if (r[k].is_zero()) continue;
        const S f = r[k] * lead_inv;
        q[k - db] = f;
        for (std::size_t j = 0; j <= db; ++j) r[k - db + j] -= f * bc[j];
    }
    return {Polynomial<S>(dom, std::move(q)), Polynomial<S>(dom, std::move(r))};
}

template <FieldScalar S>
Polynomial<S> make_monic(const Polynomial<S>& a) {
    if (a.is_zero()) return a;
    const S inv = a.leading().inverse();
    std::vector<S> c = a.coefficients();
    for (auto& x : c) x = inv * x;
    return {a.domain(), std::move(c)};
}

/// Monic gcd.
template <FieldScalar S>
Polynomial<S> gcd(Polynomial<S> a, Polynomial<S> b) {
    while (!b.is_zero()) {
        auto r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return make_monic(a);
}

/// base^e mod m.
template <FieldScalar S>
Polynomial<S> powmod(Polynomial<S> base, std::uint64_t e, const Polynomial<S>& m) {
    Polynomial<S> result = divmod(Polynomial<S>::constant(m.domain(), S::one(m.domain())), m).second;
    base = divmod(base, m).second;
    while (e > 0) {
        if (e & 1U) result = divmod(result * base, m).second;
        e >>= 1U;
        if (e > 0) base = divmod(base * base, m).second;
    }
    return result;
}

}  // namespace cen
