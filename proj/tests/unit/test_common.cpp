#include "doctest.h"

#include <random>

#include "toricoh/common.hpp"

using namespace toricoh;

TEST_SUITE("common") {

TEST_CASE("index set basics") {
    IndexSet s{0, 2, 5};
    CHECK(s.size() == 3);
    CHECK(s.contains(2));
    CHECK_FALSE(s.contains(1));
    CHECK(s.one_based() == std::vector<std::size_t>{1, 3, 6});
    CHECK(s.complement(6) == IndexSet{1, 3, 4});
    CHECK(IndexSet{2}.is_subset_of(s));
    CHECK((s & IndexSet{2, 3}) == IndexSet{2});
    CHECK(IndexSet::full(32).size() == 32);
    CHECK_THROWS_AS(IndexSet{}.insert(32), InvalidInput);
}

TEST_CASE("lex_less agrees with comparing sorted element lists") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<std::uint32_t> bits(0, 255);
    for (int t = 0; t < 5000; ++t) {
        IndexSet a(bits(rng)), b(bits(rng));
        CHECK(lex_less(a, b) == (a.elements() < b.elements()));
    }
    CHECK(lex_less(IndexSet{}, IndexSet{0}));
    CHECK(lex_less(IndexSet{0, 1}, IndexSet{0, 2}));
    CHECK(lex_less(IndexSet{0, 1, 5}, IndexSet{0, 2}));
    CHECK_FALSE(lex_less(IndexSet{31}, IndexSet{31}));
    CHECK(lex_less(IndexSet{30}, IndexSet{30, 31}));
}

TEST_CASE("characteristic must be zero or prime") {
    CHECK(Characteristic(0).is_zero());
    CHECK(Characteristic(3).value() == 3);
    CHECK_THROWS_AS(Characteristic(4), InvalidInput);
    CHECK_THROWS_AS(Characteristic(-2), InvalidInput);
    CHECK_THROWS_AS(Characteristic(1), InvalidInput);
}

TEST_CASE("neg and apex") {
    CHECK(negative_support({-1, 0, 3, -7}) == IndexSet{0, 3});
    CHECK(orthant_apex(IndexSet{1, 2}, 4) == FineDegree{0, -1, -1, 0});
    CHECK(negative_support(orthant_apex(IndexSet{0, 3}, 4)) == IndexSet{0, 3});
}

}
