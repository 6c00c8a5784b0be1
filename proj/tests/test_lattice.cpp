#include "doctest.h"

#include <random>

#include "prenichols/lattice.hpp"

using namespace prenichols;

namespace {
DegreeVector dv(std::vector<long long> c) { return DegreeVector(std::move(c)); }
}

TEST_CASE("height and support") {
    CHECK(height(dv({1, 1, 1})) == 3);
    CHECK(height(dv({0, 0, 0})) == 0);
    CHECK(height(dv({3, 6, 3})) == 12);
    CHECK(support(dv({2, 0, 1})) == std::set<int>{0, 2});
    CHECK(support(dv({0, 0, 0})).empty());
    CHECK(support(dv({0, 6, 0})) == std::set<int>{1});
}

TEST_CASE("componentwise order") {
    CHECK(leq(dv({1, 0}), dv({1, 1})));
    CHECK_FALSE(leq(dv({1, 2}), dv({2, 1})));
    CHECK(leq(dv({1, 2}), dv({1, 2})));
    CHECK_THROWS_AS(leq(dv({1}), dv({1, 2})), std::invalid_argument);
}

TEST_CASE("compact formatting") {
    CHECK(format_compact(dv({3, 6, 3})) == "1^3 2^6 3^3");
    CHECK(format_compact(dv({1, 1, 0})) == "12");
    CHECK(format_compact(dv({0, 0, 0})) == "0");
    CHECK(format_compact(dv({2, 1})) == "1^2 2");
    CHECK_THROWS_AS(format_compact(dv({-1, 0})), std::invalid_argument);

    CHECK(parse_compact("1^3 2^6 3^3", 3) == dv({3, 6, 3}));
    CHECK(parse_compact("12", 2) == dv({1, 1}));
    CHECK(parse_compact("0", 3) == dv({0, 0, 0}));
    CHECK(parse_compact("1^2 2", 2) == dv({2, 1}));
    CHECK_THROWS_AS(parse_compact("4", 3), std::invalid_argument);
}

TEST_CASE("random vectors: ring laws, height additivity, partial order, round trip") {
    std::mt19937 rng(12345);
    std::uniform_int_distribution<int> rank_dist(1, 6);
    std::uniform_int_distribution<long long> coord(0, 9);
    for (int trial = 0; trial < 300; ++trial) {
        int r = rank_dist(rng);
        auto rand_vec = [&] {
            std::vector<long long> c(r);
            for (auto& x : c) x = coord(rng);
            return DegreeVector(c);
        };
        DegreeVector a = rand_vec(), b = rand_vec(), c = rand_vec();
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(height(a + b) == height(a) + height(b));
        CHECK(leq(a, a));
        if (leq(a, b) && leq(b, a)) CHECK(a == b);
        if (leq(a, b) && leq(b, c)) CHECK(leq(a, c));
        CHECK(parse_compact(format_compact(a), r) == a);
    }
}

TEST_CASE("large vertex indices use brackets") {
    std::vector<long long> c(11, 0);
    c[10] = 2;
    CHECK(format_compact(DegreeVector(c)) == "(11)^2");
    CHECK(parse_compact("(11)^2", 11) == DegreeVector(c));
}

TEST_CASE("overflow is detected") {
    DegreeVector big = dv({(1LL << 62)});
    CHECK_THROWS_AS(big + big, std::overflow_error);
    CHECK_THROWS_AS(big * 4, std::overflow_error);
}
