#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "sumset/linalg.hpp"
#include "test_support.hpp"

using namespace sumset;

namespace {

RatVec vec(std::initializer_list<Rat> coords) { return RatVec(std::vector<Rat>(coords)); }

}  // namespace

TEST_CASE("rationals are stored reduced with positive denominator") {
    const Rat r(6, -4);
    CHECK(r.num() == -3);
    CHECK(r.den() == 2);
    CHECK(r == Rat(-3, 2));
    CHECK(Rat(0, 7) == Rat(0));
    CHECK_THROWS_AS(Rat(1, 0), InvalidParams);
}

TEST_CASE("rational parse and str round-trip") {
    CHECK(Rat::parse("3/6") == Rat(1, 2));
    CHECK(Rat::parse("-7") == Rat(-7));
    CHECK(Rat::parse("-1/2").str() == "-1/2");
    CHECK(Rat(5).str() == "5");
    CHECK_THROWS_AS(Rat::parse("x/2"), BadInput);
    CHECK_THROWS_AS(Rat::parse("1/0"), BadInput);
}

TEST_CASE("rational arithmetic is exact on random small fractions") {
    std::mt19937_64 rng(1);
    for (int trial = 0; trial < 500; ++trial) {
        const Rat a = testsup::random_rat(rng, 50, 40);
        const Rat b = testsup::random_rat(rng, 50, 40);
        CHECK((a + b) - b == a);
        if (b.sign() != 0) CHECK((a * b) / b == a);
    }
}

TEST_CASE("rational ordering agrees with cross multiplication") {
    CHECK(Rat(1, 3) < Rat(1, 2));
    CHECK(Rat(-1, 2) < Rat(-1, 3));
    CHECK(Rat(2, 4) == Rat(1, 2));
}

TEST_CASE("basis_inverse on the standard basis is the identity") {
    const std::vector<RatVec> s{RatVec::unit(1, 2), RatVec::unit(2, 2)};
    CHECK(basis_inverse(s) == RatMatrix::identity(2));
}

TEST_CASE("basis_inverse of {(1,1),(0,1)}") {
    const std::vector<RatVec> s{vec({1, 1}), vec({0, 1})};
    const RatMatrix m = basis_inverse(s);
    // Expected rows: (1, 0) and (-1, 1); checked by exact re-multiplication.
    CHECK(m.at(0, 0) == Rat(1));
    CHECK(m.at(0, 1) == Rat(0));
    CHECK(m.at(1, 0) == Rat(-1));
    CHECK(m.at(1, 1) == Rat(1));
    CHECK(apply_map(m, s[0]) == RatVec::unit(1, 2));
    CHECK(apply_map(m, s[1]) == RatVec::unit(2, 2));
}

TEST_CASE("basis_inverse rejects dependent vectors") {
    CHECK_THROWS_AS(basis_inverse({vec({1, 0}), vec({2, 0})}), SingularBasis);
}

TEST_CASE("basis_inverse sends s_i to e_i on random invertible bases") {
    std::mt19937_64 rng(2);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 4);
        const auto basis = testsup::random_basis(rng, n);
        const RatMatrix m = basis_inverse(basis);
        for (int i = 0; i < n; ++i)
            CHECK(apply_map(m, basis[static_cast<size_t>(i)]) == RatVec::unit(i + 1, n));
    }
}

TEST_CASE("apply_map examples") {
    const RatMatrix id = RatMatrix::identity(2);
    CHECK(apply_map(id, vec({Rat(3, 2), Rat(-1)})) == vec({Rat(3, 2), Rat(-1)}));

    RatMatrix m(2);
    m.at(0, 0) = Rat(1);
    m.at(1, 0) = Rat(-1);
    m.at(1, 1) = Rat(1);
    CHECK(apply_map(m, vec({1, 1})) == vec({1, 0}));
    CHECK(apply_map(m, vec({0, 1})) == vec({0, 1}));

    CHECK_THROWS_AS(apply_map(id, RatVec::zero(3)), DimensionMismatch);
}

TEST_CASE("reduce_mod2 lands in [0,2)") {
    CHECK(reduce_mod2(vec({0, 0})) == Color(vec({0, 0})));
    CHECK(reduce_mod2(vec({-1, 2})) == Color(vec({1, 0})));
    CHECK(reduce_mod2(vec({Rat(1, 2), Rat(-3, 2)})) == Color(vec({Rat(1, 2), Rat(1, 2)})));
}

TEST_CASE("reduce_mod2 is invariant under shifts by 2w for integer w") {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<long> ints(-5, 5);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 5);
        const RatVec v = testsup::random_vec(rng, n, 6, 4);
        RatVec shifted = v;
        for (int i = 0; i < n; ++i) shifted[i] += Rat(2 * ints(rng));
        CHECK(reduce_mod2(shifted) == reduce_mod2(v));
    }
}

TEST_CASE("color_sub examples") {
    const Color a = reduce_mod2(vec({1, 0}));
    CHECK(color_sub(a, a) == Color(vec({0, 0})));
    CHECK(color_sub(reduce_mod2(vec({1, 0})), reduce_mod2(vec({0, 1}))) == Color(vec({1, 1})));
    CHECK(color_sub(reduce_mod2(vec({Rat(1, 2), 0})), reduce_mod2(vec({Rat(3, 2), 1}))) ==
          Color(vec({1, 1})));
}

TEST_CASE("color_sub is compatible with reduce_mod2") {
    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 4);
        const RatVec u = testsup::random_vec(rng, n, 5, 3);
        const RatVec v = testsup::random_vec(rng, n, 5, 3);
        CHECK(reduce_mod2(u - v) == color_sub(reduce_mod2(u), reduce_mod2(v)));
    }
}

TEST_CASE("color constructor enforces the canonical range") {
    CHECK_THROWS_AS(Color(vec({2, 0})), InvalidParams);
    CHECK_THROWS_AS(Color(vec({Rat(-1, 2)})), InvalidParams);
}
