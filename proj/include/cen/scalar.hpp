#pragma once

#include <array>
#include <concepts>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "cen/errors.hpp"

namespace cen {

enum class DomainKind { rationals, prime_field, quaternions };

/// Descriptor of a coefficient ring. All supported rings are division rings
/// (J(R) = 0); the center is Q or F_p and `center_degree` is [R : Z(R)].
class ScalarDomain {
public:
    static ScalarDomain rationals() noexcept { return {DomainKind::rationals, 0}; }
    /// Throws InvalidArgument unless p is a prime below 2^32.
    static ScalarDomain prime_field(std::uint64_t p);
    static ScalarDomain quaternions() noexcept { return {DomainKind::quaternions, 0}; }

    DomainKind kind() const noexcept { return kind_; }
    std::uint32_t modulus() const noexcept { return p_; }
    std::size_t center_degree() const noexcept { return kind_ == DomainKind::quaternions ? 4 : 1; }
    bool is_field() const noexcept { return kind_ != DomainKind::quaternions; }
    std::string name() const;

    friend bool operator==(const ScalarDomain&, const ScalarDomain&) = default;

private:
    friend class ModP;
    ScalarDomain(DomainKind kind, std::uint32_t p) noexcept : kind_(kind), p_(p) {}

    DomainKind kind_;
    std::uint32_t p_;
};

/// Deterministic trial division.
bool is_prime(std::uint64_t n) noexcept;

/// Arbitrary precision fraction, always in lowest terms.
class Rational {
public:
    using Center = Rational;
    static constexpr bool commutative = true;

    Rational() = default;
    Rational(long v) : v_(v) {}  // NOLINT(google-explicit-constructor)
    Rational(long num, long den);
    explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

    /// Accepts "a/b" or "a" with optional sign.
    static Rational parse(std::string_view text);

    static Rational zero(const ScalarDomain&) { return {}; }
    static Rational one(const ScalarDomain&) { return {1}; }
    static std::vector<Rational> center_basis(const ScalarDomain&) { return {Rational(1)}; }
    static Rational from_center(const Center& c, const ScalarDomain&) { return c; }

    ScalarDomain domain() const noexcept { return ScalarDomain::rationals(); }
    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_central() const noexcept { return true; }
    Rational inverse() const;
    Rational conjugate() const { return *this; }
    std::vector<Center> center_coordinates() const { return {*this}; }
    std::string to_string() const { return v_.get_str(); }
    const mpq_class& value() const noexcept { return v_; }
    int sign() const { return sgn(v_); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }

private:
    mpq_class v_;
};

/// Residue modulo a prime p < 2^32, stored as the least nonnegative
/// representative. Each value carries its modulus.
class ModP {
public:
    using Center = ModP;
    static constexpr bool commutative = true;

    ModP(std::int64_t v, std::uint32_t p);

    static ModP zero(const ScalarDomain& d) { return {0, d.modulus()}; }
    static ModP one(const ScalarDomain& d) { return {1, d.modulus()}; }
    static std::vector<ModP> center_basis(const ScalarDomain& d) { return {one(d)}; }
    static ModP from_center(const Center& c, const ScalarDomain&) { return c; }

    ScalarDomain domain() const noexcept { return {DomainKind::prime_field, p_}; }
    bool is_zero() const noexcept { return v_ == 0; }
    bool is_one() const noexcept { return v_ == 1; }
    bool is_central() const noexcept { return true; }
    ModP inverse() const;
    ModP conjugate() const { return *this; }
    std::vector<Center> center_coordinates() const { return {*this}; }
    std::string to_string() const { return std::to_string(v_); }
    std::uint64_t value() const noexcept { return v_; }
    std::uint32_t modulus() const noexcept { return p_; }

    ModP operator-() const { return raw(v_ == 0 ? 0 : p_ - v_, p_); }
    ModP& operator+=(const ModP& o) {
        check(o);
        v_ += o.v_;
        if (v_ >= p_) v_ -= p_;
        return *this;
    }
    ModP& operator-=(const ModP& o) {
        check(o);
        v_ = v_ >= o.v_ ? v_ - o.v_ : v_ + p_ - o.v_;
        return *this;
    }
    ModP& operator*=(const ModP& o) {
        check(o);
        v_ = (v_ * o.v_) % p_;
        return *this;
    }
    friend ModP operator+(ModP a, const ModP& b) { return a += b; }
    friend ModP operator-(ModP a, const ModP& b) { return a -= b; }
    friend ModP operator*(ModP a, const ModP& b) { return a *= b; }
    friend bool operator==(const ModP& a, const ModP& b) { return a.p_ == b.p_ && a.v_ == b.v_; }

    /// Unchecked construction from a reduced residue.
    static ModP raw(std::uint64_t v, std::uint32_t p) {
        ModP r(0, p);
        r.v_ = v;
        return r;
    }

private:
    void check(const ModP& o) const {
        if (o.p_ != p_) throw DomainMismatch("residues modulo different primes");
    }

    std::uint64_t v_;
    std::uint32_t p_;
};

/// a + bi + cj + dk over Q with i^2 = j^2 = k^2 = ijk = -1.
class Quaternion {
public:
    using Center = Rational;
    static constexpr bool commutative = false;

    Quaternion() = default;
    Quaternion(Rational a, Rational b = {}, Rational c = {}, Rational d = {})  // NOLINT
        : q_{std::move(a), std::move(b), std::move(c), std::move(d)} {}
    Quaternion(long a) : Quaternion(Rational(a)) {}  // NOLINT

    static Quaternion unit_i() { return {0, 1, 0, 0}; }
    static Quaternion unit_j() { return {0, 0, 1, 0}; }
    static Quaternion unit_k() { return {0, 0, 0, 1}; }

    static Quaternion zero(const ScalarDomain&) { return {}; }
    static Quaternion one(const ScalarDomain&) { return {1}; }
    /// [1, i, j, k]
    static std::vector<Quaternion> center_basis(const ScalarDomain&);
    static Quaternion from_center(const Center& c, const ScalarDomain&) { return {c}; }

    ScalarDomain domain() const noexcept { return ScalarDomain::quaternions(); }
    bool is_zero() const;
    bool is_one() const;
    /// True iff the i, j, k parts vanish.
    bool is_central() const;
    Rational norm() const;
    Quaternion conjugate() const;
    Quaternion inverse() const;
    std::vector<Center> center_coordinates() const { return {q_.begin(), q_.end()}; }
    std::string to_string() const;
    const Rational& operator[](std::size_t t) const { return q_[t]; }
    const std::array<Rational, 4>& parts() const noexcept { return q_; }

    Quaternion operator-() const { return {-q_[0], -q_[1], -q_[2], -q_[3]}; }
    Quaternion& operator+=(const Quaternion& o);
    Quaternion& operator-=(const Quaternion& o);
    Quaternion& operator*=(const Quaternion& o) { return *this = *this * o; }
    friend Quaternion operator+(Quaternion a, const Quaternion& b) { return a += b; }
    friend Quaternion operator-(Quaternion a, const Quaternion& b) { return a -= b; }
    friend Quaternion operator*(const Quaternion& a, const Quaternion& b);
    friend bool operator==(const Quaternion& a, const Quaternion& b) { return a.q_ == b.q_; }

private:
    std::array<Rational, 4> q_;
};

template <class S>
concept Scalar = requires(const S a, const S b, const ScalarDomain d, const typename S::Center c) {
    { a + b } -> std::same_as<S>;
    { a - b } -> std::same_as<S>;
    { a * b } -> std::same_as<S>;
    { -a } -> std::same_as<S>;
    { a == b } -> std::convertible_to<bool>;
    { a.is_zero() } -> std::convertible_to<bool>;
    { a.is_central() } -> std::convertible_to<bool>;
    { a.inverse() } -> std::same_as<S>;
    { a.conjugate() } -> std::same_as<S>;
    { a.domain() } -> std::same_as<ScalarDomain>;
    { a.to_string() } -> std::same_as<std::string>;
    { a.center_coordinates() } -> std::same_as<std::vector<typename S::Center>>;
    { S::zero(d) } -> std::same_as<S>;
    { S::one(d) } -> std::same_as<S>;
    { S::center_basis(d) } -> std::same_as<std::vector<S>>;
    { S::from_center(c, d) } -> std::same_as<S>;
    { S::commutative } -> std::convertible_to<bool>;
};

/// Scalar types whose domain is a field (the center is the whole ring).
template <class S>
concept FieldScalar = Scalar<S> && S::commutative;

/// Domain-checked arithmetic for operands whose domain is only known at run time.
enum class ArithOp { add, sub, mul };

template <Scalar S>
S arith(const S& a, const S& b, ArithOp op) {
    if (a.domain() != b.domain()) throw DomainMismatch("operands in " + a.domain().name() + " and " + b.domain().name());
    switch (op) {
        case ArithOp::add: return a + b;
        case ArithOp::sub: return a - b;
        case ArithOp::mul: return a * b;
    }
    return a;
}

}  // namespace cen
