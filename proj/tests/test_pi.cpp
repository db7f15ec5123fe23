#include <doctest.h>

#include "support.hpp"

using namespace cen;
using namespace cen::testing;

TEST_SUITE("pi") {

TEST_CASE("standard polynomial terms") {
    const auto s3 = MultilinearPoly::standard(3);
    CHECK(s3.arity == 3);
    CHECK(s3.terms.size() == 6);
    long total = 0;
    for (const auto& t : s3.terms) total += t.coefficient;
    CHECK(total == 0);
    CHECK(s3.terms.front().coefficient == 1);
}

TEST_CASE("evaluation examples") {
    const auto q = Q();
    const auto j3 = jordan_matrix<Rational>(JordanType({3}), q);
    const std::vector<Matrix<Rational>> powers{j3, j3 * j3};
    CHECK(eval_poly<Rational>(MultilinearPoly::standard(2), powers).is_zero());

    const auto e11 = Matrix<Rational>::unit(q, 2, 2, 0, 0);
    const auto e12 = Matrix<Rational>::unit(q, 2, 2, 0, 1);
    const auto e22 = Matrix<Rational>::unit(q, 2, 2, 1, 1);
    const std::vector<Matrix<Rational>> two{e11, e12};
    CHECK(eval_poly<Rational>(MultilinearPoly::standard(2), two) == e12);
    const std::vector<Matrix<Rational>> stair{e11, e12, e22};
    CHECK(eval_poly<Rational>(MultilinearPoly::standard(3), stair) == e12);
    CHECK(eval_standard<Rational>(stair) == e12);
    CHECK_THROWS_AS(eval_poly<Rational>(MultilinearPoly::standard(2), stair), DimensionMismatch);
}

TEST_CASE("fast and naive standard evaluation agree") {
    std::mt19937_64 rng(41);
    auto run = [&]<Scalar S>(const ScalarDomain& dom) {
        for (std::size_t r = 1; r <= 5; ++r)
            for (int t = 0; t < 4; ++t) {
                std::vector<Matrix<S>> args;
                for (std::size_t k = 0; k < r; ++k) args.push_back(random_matrix<S>(dom, 3, 3, rng));
                CHECK(eval_standard<S>(args) == eval_poly<S>(MultilinearPoly::standard(r), args));
            }
    };
    run.operator()<Rational>(Q());
    run.operator()<ModP>(F(101));
    run.operator()<Quaternion>(H());
}

TEST_CASE("multilinearity and alternation") {
    std::mt19937_64 rng(42);
    const auto f = F(101);
    for (int t = 0; t < 10; ++t) {
        std::vector<Matrix<ModP>> args;
        for (int k = 0; k < 4; ++k) args.push_back(random_matrix<ModP>(f, 3, 3, rng));
        const auto extra = random_matrix<ModP>(f, 3, 3, rng);
        const ModP c = random_center<ModP>(rng, f);
        const std::size_t slot = rng() % 4;
        auto summed = args, other = args, scaled = args;
        summed[slot] = args[slot] + extra;
        other[slot] = extra;
        scaled[slot] = scale(c, args[slot]);
        CHECK(eval_standard<ModP>(summed) == eval_standard<ModP>(args) + eval_standard<ModP>(other));
        CHECK(eval_standard<ModP>(scaled) == scale(c, eval_standard<ModP>(args)));
        auto repeated = args;
        repeated[(slot + 1) % 4] = repeated[slot];
        CHECK(eval_standard<ModP>(repeated).is_zero());
    }
}

TEST_CASE("standard identities on centralizers") {
    const auto q = Q();
    const auto j4 = jordan_matrix<Rational>(JordanType({4}), q);
    const auto r1 = check_standard_identity(j4, 50, 0);
    CHECK(r1.degree == 2);
    CHECK(r1.passed());
    CHECK(r1.tuples_checked == 50);

    const Matrix<Rational> zero2(q, 2, 2);
    const auto r2 = check_standard_identity(zero2, 50, 0);
    CHECK(r2.degree == 4);
    CHECK(r2.passed());
    const auto basis = structured_basis(zero2);
    CHECK(check_standard_identity_exhaustive(basis, 4).passed());

    const auto s3 = check_standard_identity_exhaustive(basis, 3);
    CHECK_FALSE(s3.passed());
    CHECK(s3.tuples_checked == 4);
    CHECK_FALSE(check_standard_identity(basis, 3, 20, 1).passed());
    CHECK_THROWS_AS(check_standard_identity(Matrix<Quaternion>(H(), 2, 2), 5, 0), UnsupportedDomain);
}

TEST_CASE("product identities") {
    const auto j3 = jordan_matrix<Rational>(JordanType({3}), Q());
    const auto r = check_product_identity(j3, 20, 0);
    CHECK(r.degree == 2);
    CHECK(r.copies == 3);
    CHECK(r.passed());

    const auto a = jordan_matrix<Rational>(JordanType({2, 2, 1}), Q());
    const auto rp = check_product_identity(a, 100, 3);
    CHECK(rp.degree == 4);
    CHECK(rp.copies == 4);
    CHECK(rp.passed());
    CHECK(rp.tuples_checked == 100);

    const auto m2 = check_standard_identity(Matrix<Rational>(Q(), 2, 2), 20, 4);
    CHECK(m2.passed());
}

TEST_CASE("non-identities on the semisimple quotient") {
    CHECK_FALSE(standard_nonidentity_witness(structured_basis(jordan_matrix<Rational>(JordanType({3, 1}), Q()))));
    for (const auto& type : {JordanType({1, 1}), JordanType({2, 2, 1}), JordanType({3, 1, 1, 1}), JordanType({2, 2, 2})}) {
        const auto w = standard_nonidentity_witness(structured_basis(jordan_matrix<ModP>(type, F(101))));
        REQUIRE(w);
        CHECK(w->degree == 2 * pi_degree(type) - 2);
        CHECK_FALSE(w->value.is_zero());
        CHECK(w->nonzero_in_quotient);
    }
}

TEST_CASE("identity checks are reproducible") {
    const auto a = jordan_matrix<ModP>(JordanType({2, 1, 1}), F(7));
    const auto basis = structured_basis(a);
    const auto r1 = check_standard_identity(basis, 3, 10, 99);
    const auto r2 = check_standard_identity(basis, 3, 10, 99);
    CHECK(r1.failures.size() == r2.failures.size());
    for (std::size_t i = 0; i < r1.failures.size(); ++i) CHECK(r1.failures[i] == r2.failures[i]);
}

}
