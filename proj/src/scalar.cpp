#include "cen/scalar.hpp"

#include <cctype>

namespace cen {

ScalarDomain ScalarDomain::prime_field(std::uint64_t p) {
    if (p > 0xffffffffULL || !is_prime(p)) throw InvalidArgument("modulus " + std::to_string(p) + " is not a prime below 2^32");
    return {DomainKind::prime_field, static_cast<std::uint32_t>(p)};
}

std::string ScalarDomain::name() const {
    switch (kind_) {
        case DomainKind::rationals: return "Q";
        case DomainKind::prime_field: return "F_" + std::to_string(p_);
        case DomainKind::quaternions: return "H_Q";
    }
    return "?";
}

bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t q = 3; q * q <= n; q += 2)
        if (n % q == 0) return false;
    return true;
}

// ---------------------------------------------------------------- Rational

Rational::Rational(long num, long den) {
    if (den == 0) throw ZeroInverse();
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    auto valid_int = [](std::string_view t) {
        std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
        if (i >= t.size()) return false;
        for (; i < t.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
        return true;
    };
    auto strip_plus = [](std::string t) { return (!t.empty() && t[0] == '+') ? t.substr(1) : t; };
    const auto slash = s.find('/');
    if (slash == std::string::npos) {
        if (!valid_int(s)) throw ParseError("not a rational literal: '" + std::string(text) + "'");
        return Rational(mpq_class(mpz_class(strip_plus(s))));
    }
    const std::string num = s.substr(0, slash);
    const std::string den = s.substr(slash + 1);
    if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+')
        throw ParseError("not a rational literal: '" + std::string(text) + "'");
    mpz_class d(den);
    if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    return Rational(mpq_class(mpz_class(strip_plus(num)), d));
}

Rational Rational::inverse() const {
    if (is_zero()) throw ZeroInverse();
    return Rational(mpq_class(1 / v_));
}

// ---------------------------------------------------------------- ModP

ModP::ModP(std::int64_t v, std::uint32_t p) : p_(p) {
    if (p == 0) throw InvalidArgument("zero modulus");
    const auto m = static_cast<std::int64_t>(p);
    auto r = v % m;
    if (r < 0) r += m;
    v_ = static_cast<std::uint64_t>(r);
}

ModP ModP::inverse() const {
    if (v_ == 0) throw ZeroInverse();
    // extended Euclid on (v, p)
    std::int64_t a = static_cast<std::int64_t>(v_), b = p_, x0 = 1, x1 = 0;
    while (b != 0) {
        const std::int64_t q = a / b;
        std::tie(a, b) = std::pair{b, a - q * b};
        std::tie(x0, x1) = std::pair{x1, x0 - q * x1};
    }
    return {x0, p_};
}

// ---------------------------------------------------------------- Quaternion

std::vector<Quaternion> Quaternion::center_basis(const ScalarDomain&) {
    return {Quaternion(1), unit_i(), unit_j(), unit_k()};
}

bool Quaternion::is_zero() const {
    return q_[0].is_zero() && q_[1].is_zero() && q_[2].is_zero() && q_[3].is_zero();
}

bool Quaternion::is_one() const { return q_[0].is_one() && is_central(); }

bool Quaternion::is_central() const { return q_[1].is_zero() && q_[2].is_zero() && q_[3].is_zero(); }

Rational Quaternion::norm() const { return q_[0] * q_[0] + q_[1] * q_[1] + q_[2] * q_[2] + q_[3] * q_[3]; }

Quaternion Quaternion::conjugate() const { return {q_[0], -q_[1], -q_[2], -q_[3]}; }

Quaternion Quaternion::inverse() const {
    if (is_zero()) throw ZeroInverse();
    const Rational s = norm().inverse();
    return {q_[0] * s, -q_[1] * s, -q_[2] * s, -q_[3] * s};
}

std::string Quaternion::to_string() const {
    return "[" + q_[0].to_string() + ", " + q_[1].to_string() + ", " + q_[2].to_string() + ", " + q_[3].to_string() + "]";
}

Quaternion& Quaternion::operator+=(const Quaternion& o) {
    for (std::size_t t = 0; t < 4; ++t) q_[t] += o.q_[t];
    return *this;
}

Quaternion& Quaternion::operator-=(const Quaternion& o) {
    for (std::size_t t = 0; t < 4; ++t) q_[t] -= o.q_[t];
    return *this;
}

Quaternion operator*(const Quaternion& x, const Quaternion& y) {
    const auto& [a1, b1, c1, d1] = x.q_;
    const auto& [a2, b2, c2, d2] = y.q_;
    return {a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
            a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
            a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
            a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2};
}

}  // namespace cen
