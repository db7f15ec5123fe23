#include <doctest.h>

#include "cen/spectrum.hpp"
#include "support.hpp"

using namespace cen;
using namespace cen::testing;

TEST_SUITE("matrix") {

TEST_CASE("rref examples") {
    const auto id = Matrix<Rational>::identity(Q(), 3);
    const auto r = rref(id);
    CHECK(r.reduced == id);
    CHECK(r.pivots == std::vector<std::size_t>{0, 1, 2});
    CHECK(r.rank == 3);

    const auto n = mat<Rational>(Q(), {{0, 1}, {0, 0}});
    const auto rn = rref(n);
    CHECK(rn.reduced == n);
    CHECK(rn.pivots == std::vector<std::size_t>{1});
    CHECK(rn.rank == 1);
}

TEST_CASE("rref over the quaternions uses left row operations") {
    const auto i = Quaternion::unit_i(), j = Quaternion::unit_j(), k = Quaternion::unit_k();
    const auto row = Matrix<Quaternion>::from_rows(H(), {{i, j}});
    const auto r = rref(row);
    CHECK(r.rank == 1);
    CHECK(r.reduced(0, 0) == Quaternion(1));
    CHECK(r.reduced(0, 1) == -k);
    CHECK(i * r.reduced(0, 0) == i);
    CHECK(i * r.reduced(0, 1) == j);
}

TEST_CASE("nullspace examples") {
    const auto z = nullspace(Matrix<Rational>(Q(), 2, 2));
    REQUIRE(z.size() == 2);
    CHECK(z[0] == Vector<Rational>{1, 0});
    CHECK(z[1] == Vector<Rational>{0, 1});
    CHECK(nullspace(Matrix<Rational>::identity(Q(), 3)).empty());
    const auto v = nullspace(mat<Rational>(Q(), {{1, 1}, {2, 2}}));
    REQUIRE(v.size() == 1);
    CHECK(v[0][0] == -v[0][1]);
    CHECK_FALSE(v[0][0].is_zero());
}

TEST_CASE("powers, scaling and shapes") {
    const auto j3 = jordan_matrix<Rational>(JordanType({3}), Q());
    CHECK(matpow(j3, 2) == mat<Rational>(Q(), {{0, 0, 1}, {0, 0, 0}, {0, 0, 0}}));
    CHECK(matpow(j3, 3).is_zero());
    CHECK(matpow(j3, 0) == Matrix<Rational>::identity(Q(), 3));
    const auto hq = Matrix<Quaternion>::identity(H(), 2);
    CHECK_THROWS_AS(scale(Quaternion::unit_i(), hq), NonCentralScale);
    CHECK(scale(Quaternion(2), hq)(1, 1) == Quaternion(2));
    CHECK_THROWS_AS(j3 * Matrix<Rational>(Q(), 2, 2), DimensionMismatch);
    CHECK_THROWS_AS(j3 + Matrix<Rational>(Q(), 2, 3), DimensionMismatch);
    CHECK_THROWS_AS(Matrix<Rational>::from_rows(Q(), {{1, 2}, {3}}), ShapeError);
}

TEST_CASE("inverse and solve") {
    const auto a = mat<Rational>(Q(), {{2, 1}, {1, 1}});
    CHECK(a * inverse(a) == Matrix<Rational>::identity(Q(), 2));
    CHECK_THROWS_AS(inverse(mat<Rational>(Q(), {{1, 2}, {2, 4}})), SingularMatrix);
    const auto x = solve(a, Vector<Rational>{3, 2});
    REQUIRE(x);
    CHECK(*x == Vector<Rational>{1, 1});
    CHECK_FALSE(solve(mat<Rational>(Q(), {{1, 1}, {1, 1}}), Vector<Rational>{1, 2}));
    const auto i = Quaternion::unit_i(), j = Quaternion::unit_j();
    const auto hq = Matrix<Quaternion>::from_rows(H(), {{i, j}, {Quaternion(1), i}});
    CHECK(hq * inverse(hq) == Matrix<Quaternion>::identity(H(), 2));
    CHECK(inverse(hq) * hq == Matrix<Quaternion>::identity(H(), 2));
}

TEST_CASE("minimal polynomial") {
    const auto z = Polynomial<Rational>::variable(Q());
    CHECK(minimal_polynomial(jordan_matrix<Rational>(JordanType({3}), Q())) == z * z * z);
    CHECK(minimal_polynomial(Matrix<Rational>(Q(), 4, 4)) == z);
    const auto diag = mat<Rational>(Q(), {{2, 0, 0}, {0, 2, 0}, {0, 0, 3}});
    const auto f = minimal_polynomial(diag);
    CHECK(f == Polynomial<Rational>(Q(), {6, -5, 1}));
    CHECK(f.evaluate(diag).is_zero());
    CHECK_THROWS_AS(minimal_polynomial(Matrix<Quaternion>::identity(H(), 2)), UnsupportedDomain);
}

TEST_CASE("characteristic polynomial and eigenvalues") {
    const auto diag = mat<Rational>(Q(), {{2, 0, 0}, {0, 2, 0}, {0, 0, 3}});
    CHECK(characteristic_polynomial(diag) == Polynomial<Rational>(Q(), {-12, 16, -7, 1}));
    const auto ev = eigen_split(diag);
    REQUIRE(ev.size() == 2);
    CHECK(ev[0].value == Rational(2));
    CHECK(ev[0].multiplicity == 2);
    CHECK(ev[1].value == Rational(3));
    CHECK(ev[1].multiplicity == 1);

    const auto f7 = F(7);
    const auto a = jordan_matrix<ModP>(JordanType({2, 1}), f7) + scale(ModP(5, 7), Matrix<ModP>::identity(f7, 3));
    const auto ev7 = eigen_split(a);
    REQUIRE(ev7.size() == 1);
    CHECK(ev7[0].value == ModP(5, 7));
    CHECK(ev7[0].multiplicity == 3);

    const auto companion = mat<Rational>(Q(), {{0, -1}, {1, 0}});
    CHECK_THROWS_AS(eigen_split(companion), NonSplitSpectrum);
    try {
        eigen_split(companion);
    } catch (const NonSplitSpectrum& e) {
        CHECK(e.factor() == "z^2 + 1");
    }
    // z^2 + 1 splits modulo 5 as (z - 2)(z - 3).
    const auto ev5 = eigen_split(mat<ModP>(F(5), {{0, -1}, {1, 0}}));
    REQUIRE(ev5.size() == 2);
    CHECK(ev5[0].value == ModP(2, 5));
    CHECK(ev5[1].value == ModP(3, 5));
    CHECK_THROWS_AS(characteristic_polynomial(Matrix<Rational>(Q(), 17, 17)), InvalidArgument);
}

TEST_CASE("roots over a large prime field") {
    const auto fp = F(2147483647);
    const auto a = mat<ModP>(fp, {{1000000, 0, 0}, {0, 2000000000, 0}, {0, 0, 1000000}});
    const auto ev = eigen_split(a);
    REQUIRE(ev.size() == 2);
    CHECK(ev[0].value == ModP(1000000, 2147483647));
    CHECK(ev[0].multiplicity == 2);
    CHECK(ev[1].value == ModP(2000000000, 2147483647));
    CHECK_THROWS_AS(eigen_split(mat<ModP>(fp, {{0, -1}, {1, 0}})), NonSplitSpectrum);
}

TEST_CASE("rref and nullspace invariants on random matrices") {
    std::mt19937_64 rng(3);
    auto run = [&]<Scalar S>(const ScalarDomain& dom) {
        for (int t = 0; t < 40; ++t) {
            const std::size_t r = 1 + rng() % 5, c = 1 + rng() % 5;
            auto a = random_matrix<S>(dom, r, c, rng);
            if (t % 3 == 0 && r > 1)
                for (std::size_t j = 0; j < c; ++j) a(r - 1, j) = a(0, j);
            const auto red = rref(a);
            CHECK(rref(red.reduced).reduced == red.reduced);
            const auto g = random_invertible<S>(dom, r, rng);
            CHECK(rank(g * a) == red.rank);
            const auto ns = nullspace(a);
            CHECK(ns.size() + red.rank == c);
            for (const auto& v : ns) CHECK(is_zero(a * v));
        }
    };
    run.operator()<Rational>(Q());
    run.operator()<ModP>(F(5));
    run.operator()<Quaternion>(H());
}

TEST_CASE("minimal polynomial invariants on random matrices") {
    std::mt19937_64 rng(5);
    auto run = [&]<FieldScalar S>(const ScalarDomain& dom) {
        for (int t = 0; t < 30; ++t) {
            const std::size_t d = 1 + rng() % 5;
            auto a = random_matrix<S>(dom, d, d, rng);
            if (t % 2) a = planted_nilpotent<S>(JordanType({d}), dom, rng);
            const auto f = minimal_polynomial(a);
            CHECK(f.is_monic());
            CHECK(f.evaluate(a).is_zero());
            std::vector<Matrix<S>> powers;
            for (long k = 0; k < f.degree(); ++k) powers.push_back(matpow(a, static_cast<std::size_t>(k)));
            CHECK(center_rank(std::span<const Matrix<S>>(powers)) == static_cast<std::size_t>(f.degree()));
            const auto chi = characteristic_polynomial(a);
            CHECK(chi.degree() == static_cast<long>(d));
            CHECK(chi.evaluate(a).is_zero());
            CHECK(divmod(chi, f).second.is_zero());
        }
    };
    run.operator()<Rational>(Q());
    run.operator()<ModP>(F(7));
}

}
