#include <doctest.h>

#include "support.hpp"

using namespace cen;
using namespace cen::testing;

namespace {

template <Scalar S>
std::size_t kernel_dim(const Matrix<S>& a, std::size_t i) {
    return a.cols() - rank(matpow(a, i));
}

}  // namespace

TEST_SUITE("jordan") {

TEST_CASE("Jordan types") {
    const JordanType t({2, 2, 1});
    CHECK(t.blocks() == 3);
    CHECK(t.index() == 2);
    CHECK(t.dimension() == 5);
    CHECK(t.offset(2) == 4);
    CHECK(t.shift_gap(2, 0) == 1);
    CHECK(t.shift_gap(0, 2) == 0);
    CHECK(t.transposed_gap(0, 2) == 1);
    CHECK(t.distinct_sizes() == 2);
    CHECK(t.multiplicities() == std::map<std::size_t, std::size_t, std::greater<>>{{2, 2}, {1, 1}});
    CHECK(t.to_string() == "(2,2,1)");
    CHECK(JordanType::from_unsorted({1, 2, 2}) == t);
    CHECK_THROWS_AS(JordanType({1, 2}), InvalidArgument);
    CHECK_THROWS_AS(JordanType({2, 0}), InvalidArgument);
}

TEST_CASE("partitions are enumerated completely") {
    const std::size_t counts[] = {1, 1, 2, 3, 5, 7, 11, 15, 22};
    for (std::size_t d = 1; d <= 8; ++d) {
        const auto ps = partitions(d);
        CHECK(ps.size() == counts[d]);
        for (const auto& p : ps) CHECK(p.dimension() == d);
    }
    CHECK(partitions(3).front() == JordanType({3}));
    CHECK(partitions(3).back() == JordanType({1, 1, 1}));
}

TEST_CASE("nilpotency test") {
    const auto j4 = jordan_matrix<Rational>(JordanType({4}), Q());
    CHECK(is_nilpotent(j4).nilpotent);
    CHECK(is_nilpotent(j4).index == 4);
    CHECK_FALSE(is_nilpotent(Matrix<Rational>::identity(Q(), 3)).nilpotent);
    std::mt19937_64 rng(1);
    const auto c = planted_nilpotent<ModP>(JordanType({2, 2}), F(7), rng);
    CHECK(is_nilpotent(c).nilpotent);
    CHECK(is_nilpotent(c).index == 2);
    CHECK(is_nilpotent(Matrix<ModP>(F(7), 3, 3)).index == 1);
}

TEST_CASE("Jordan base examples") {
    CHECK(jordan_base(Matrix<Rational>(Q(), 4, 4)).type == JordanType({1, 1, 1, 1}));
    CHECK(jordan_base(jordan_matrix<Rational>(JordanType({3}), Q())).type == JordanType({3}));
    std::mt19937_64 rng(2);
    const auto a = planted_nilpotent<ModP>(JordanType({2, 2, 1}), F(7), rng);
    const auto base = jordan_base(a);
    CHECK(base.type == JordanType({2, 2, 1}));
    CHECK(verify_base(a, base));
    CHECK(base.inverse_change * a * base.change_of_base == shift_matrix<ModP>(base.type, F(7)));
    CHECK_THROWS_AS(jordan_base(Matrix<Rational>::identity(Q(), 2)), NotNilpotent);
}

TEST_CASE("verify_base accepts valid and rejects tampered bases") {
    const auto a = jordan_matrix<Rational>(JordanType({2, 1}), Q());
    const Vector<Rational> e0{1, 0, 0}, e1{0, 1, 0}, e2{0, 0, 1};
    JordanBasis<Rational> manual{JordanType({2, 1}), {{e1, e0}, {e2}},
                                 Matrix<Rational>::from_columns(Q(), 3, {e1, e0, e2}), Matrix<Rational>(Q(), 3, 3)};
    manual.inverse_change = inverse(manual.change_of_base);
    CHECK(verify_base(a, manual));

    auto computed = jordan_base(a);
    CHECK(verify_base(a, computed));
    computed.chains[0][0] = Vector<Rational>(3, Rational(0));
    CHECK_FALSE(verify_base(a, computed));
}

TEST_CASE("indecomposability") {
    CHECK(is_indecomposable(jordan_matrix<Rational>(JordanType({4}), Q())));
    CHECK_FALSE(is_indecomposable(Matrix<Rational>(Q(), 2, 2)));
    CHECK_FALSE(is_indecomposable(jordan_matrix<Rational>(JordanType({2, 1}), Q())));
    CHECK_THROWS_AS(is_indecomposable(Matrix<Rational>::identity(Q(), 2)), NotNilpotent);
}

TEST_CASE("block projections are commuting idempotents") {
    std::mt19937_64 rng(4);
    const auto a = planted_nilpotent<Rational>(JordanType({3, 1, 1}), Q(), rng);
    const auto base = jordan_base(a);
    auto sum = Matrix<Rational>(Q(), 5, 5);
    for (std::size_t d = 0; d < base.type.blocks(); ++d) {
        const auto e = block_projection(base, d);
        CHECK(e * e == e);
        CHECK(e * a == a * e);
        CHECK(rank(e) == base.type.size(d));
        sum += e;
    }
    CHECK(sum == Matrix<Rational>::identity(Q(), 5));
}

TEST_CASE("express_in_base") {
    std::mt19937_64 rng(6);
    const auto f5 = F(5);
    const auto a = planted_nilpotent<ModP>(JordanType({3, 2}), f5, rng);
    const auto base = jordan_base(a);
    const auto x = express_in_base(base, base.chains[0][1]);
    for (std::size_t g = 0; g < 2; ++g)
        for (std::size_t i = 0; i < base.type.size(g); ++i)
            CHECK(x[g][i] == ModP(g == 0 && i == 1 ? 1 : 0, 5));
    for (const auto& block : express_in_base(base, Vector<ModP>(5, ModP(0, 5))))
        for (const auto& c : block) CHECK(c.is_zero());
    for (int t = 0; t < 20; ++t) {
        const auto u = random_matrix<ModP>(f5, 5, 1, rng).column(0);
        const auto coords = express_in_base(base, u);
        Vector<ModP> back(5, ModP(0, 5));
        for (std::size_t g = 0; g < 2; ++g)
            for (std::size_t i = 0; i < base.type.size(g); ++i)
                for (std::size_t r = 0; r < 5; ++r) back[r] += base.chains[g][i][r] * coords[g][i];
        CHECK(back == u);
    }
}

TEST_CASE("block sizes survive random similarity") {
    std::mt19937_64 rng(8);
    const auto f7 = F(7);
    for (int t = 0; t < 60; ++t) {
        const std::size_t d = 1 + rng() % 8;
        const auto ps = partitions(d);
        const auto& type = ps[rng() % ps.size()];
        const auto a = planted_nilpotent<ModP>(type, f7, rng);
        const auto base = jordan_base(a);
        CHECK(base.type == type);
        CHECK(verify_base(a, base));
        CHECK(kernel_dim(a, 1) == type.blocks());
        for (std::size_t i = 1; i <= type.index(); ++i) {
            std::size_t tall = 0;
            for (const auto k : type.sizes()) tall += k >= i;
            CHECK(kernel_dim(a, i) - kernel_dim(a, i - 1) == tall);
        }
        CHECK(is_indecomposable(a) == (type.blocks() == 1));
    }
}

TEST_CASE("Jordan bases over the quaternions") {
    std::mt19937_64 rng(9);
    for (const auto& type : {JordanType({2, 1}), JordanType({3}), JordanType({1, 1}), JordanType({2, 2})}) {
        const auto a = planted_nilpotent<Quaternion>(type, H(), rng);
        const auto base = jordan_base(a);
        CHECK(base.type == type);
        CHECK(verify_base(a, base));
    }
}

}
