#include "doctest.h"

#include <random>

#include "prenichols/hilbert.hpp"
#include "prenichols/poset.hpp"

using namespace prenichols;

namespace {

DegreeVector dv(std::vector<long long> c) { return DegreeVector(std::move(c)); }

RootDatum a2_order3() { return build_datum(cartan_braiding(named_cartan_matrix("A2"), 3)); }

RootDatum d3_datum() {
    std::vector<std::vector<Scalar>> q{
        {parse_scalar("-1"), parse_scalar("zeta(3)^2"), parse_scalar("1")},
        {parse_scalar("1"), parse_scalar("zeta(6)"), parse_scalar("zeta(3)^2")},
        {parse_scalar("1"), parse_scalar("1"), parse_scalar("-1")}};
    std::vector<DegreeVector> roots;
    for (auto c : std::vector<std::vector<long long>>{{1, 0, 0}, {0, 1, 0}, {0, 0, 1},
                                                      {1, 1, 0}, {0, 1, 1}, {0, 2, 1},
                                                      {1, 1, 1}, {1, 2, 0}, {1, 2, 1}, {1, 3, 1}})
        roots.push_back(dv(c));
    return build_datum(BraidingMatrix(std::move(q)), roots);
}

} // namespace

TEST_CASE("geometric factor") {
    TruncatedSeries s = geometric_factor(dv({1, 0}), 3);
    CHECK(s.coeff(dv({0, 0})) == 1);
    CHECK(s.coeff(dv({1, 0})) == 1);
    CHECK(s.coeff(dv({3, 0})) == 1);
    CHECK(s.coeff(dv({2, 1})) == 0);
    CHECK(s.coeffs().size() == 4);

    TruncatedSeries t = geometric_factor(dv({3, 3}), 5);
    CHECK(t.coeffs().size() == 1); // only the constant term fits

    std::vector<long long> zero{0, 0};
    CHECK_THROWS_AS(geometric_factor(DegreeVector(zero), 4), std::invalid_argument);
}

TEST_CASE("geometric product counts monomials of a polynomial ring") {
    // product over Delta_+(A2) = Hilbert series of k[x,y,z] with degrees
    // a1, a2, a1+a2; check against a direct monomial count
    long long D = 8;
    TruncatedSeries prod = geometric_factor(dv({1, 0}), D) * geometric_factor(dv({0, 1}), D) *
                           geometric_factor(dv({1, 1}), D);
    std::map<DegreeVector, Int> count;
    for (long long a = 0; a <= D; ++a)
        for (long long b = 0; a + b <= D; ++b)
            for (long long c = 0; a + b + 2 * c <= D; ++c)
                count[dv({a + c, b + c})] += 1;
    for (const auto& [deg, n] : count) CHECK(prod.coeff(deg) == n);
    for (const auto& [deg, n] : prod.coeffs()) CHECK(count[deg] == n);
}

TEST_CASE("qfactor") {
    TruncatedSeries s = qfactor(dv({1, 0}), 3, 6);
    CHECK(s.coeffs().size() == 3);
    CHECK(s.coeff(dv({2, 0})) == 1);
    CHECK(s.coeff(dv({3, 0})) == 0);
    TruncatedSeries t = qfactor(dv({0, 1}), 2, 6);
    CHECK(t.coeffs().size() == 2);
    CHECK_THROWS_AS(qfactor(dv({1, 0}), 1, 6), std::invalid_argument);

    // restricted PBW count for Cartan A2, N = 3: dimension 27
    TruncatedSeries nich = qfactor(dv({1, 0}), 3, 12) * qfactor(dv({1, 1}), 3, 12) *
                           qfactor(dv({0, 1}), 3, 12);
    CHECK(nich.sum_of_coeffs() == 27);
}

TEST_CASE("nichols series of Cartan A2 at order 3") {
    RootDatum d = a2_order3();
    TruncatedSeries s = nichols_series(d, 12);
    CHECK(s.coeff(dv({0, 0})) == 1);
    CHECK(s.coeff(dv({1, 0})) == 1);
    CHECK(s.coeff(dv({0, 1})) == 1);
    CHECK(s.coeff(dv({2, 0})) == 1);
    CHECK(s.coeff(dv({1, 1})) == 2);
    CHECK(s.coeff(dv({0, 2})) == 1);
    CHECK(s.sum_of_coeffs() == 27);
}

TEST_CASE("rank-1 series") {
    RootDatum d = build_datum(BraidingMatrix({{Scalar::root_of_unity(5)}}));
    TruncatedSeries s = nichols_series(d, 12);
    CHECK(s.sum_of_coeffs() == 5);
    SumGround g = build_ground(d);
    TruncatedSeries full = prenichols_series(d, g, 1, 12);
    // x^n z^p with n < 5: exactly one basis monomial in every degree
    for (long long k = 0; k <= 12; ++k) CHECK(full.coeff(dv({k})) == 1);
}

TEST_CASE("prenichols series") {
    RootDatum d = a2_order3();
    SumGround g = build_ground(d);
    // empty set: the Nichols algebra itself
    CHECK(prenichols_series(d, g, 0, 10) == nichols_series(d, 10));
    // keeping only z at degree 1^3 raises that coefficient by one
    Bitset b = Bitset(1) << *g.index_of(dv({3, 0}));
    TruncatedSeries s = prenichols_series(d, g, b, 10);
    CHECK(s.coeff(dv({3, 0})) == nichols_series(d, 10).coeff(dv({3, 0})) + 1);
    // non-closed set rejected
    Bitset open_set = (Bitset(1) << *g.index_of(dv({3, 0}))) | (Bitset(1) << *g.index_of(dv({0, 3})));
    CHECK_THROWS_AS(prenichols_series(d, g, open_set, 10), std::invalid_argument);
}

TEST_CASE("monotonicity in B") {
    RootDatum d = a2_order3();
    SumGround g = build_ground(d);
    auto closed = enumerate_closed(g);
    for (const auto& small : closed)
        for (const auto& large : closed) {
            if ((small & large) != small) continue;
            TruncatedSeries s1 = prenichols_series(d, g, small, 8);
            TruncatedSeries s2 = prenichols_series(d, g, large, 8);
            CHECK(s1.leq_coefficientwise(s2));
        }
}

TEST_CASE("factorization along the two PBW routes") {
    // nichols * prod geometric over hOc == structural series of the eminent algebra
    std::vector<RootDatum> data;
    data.push_back(a2_order3());
    data.push_back(build_datum(cartan_braiding(named_cartan_matrix("A2"), 5)));
    data.push_back(build_datum(cartan_braiding(named_cartan_matrix("B2"), 3)));
    data.push_back(d3_datum());
    for (const auto& d : data) {
        long long D = 12;
        TruncatedSeries lhs = nichols_series(d, D);
        for (const auto& u : d.hOc()) lhs = lhs * geometric_factor(u, D);
        CHECK(lhs == eminent_series_structural(d, D));
    }
}

TEST_CASE("pbw count oracle agrees with the series") {
    RootDatum d = a2_order3();
    SumGround g = build_ground(d);
    for (const auto& b : enumerate_closed(g)) {
        TruncatedSeries lhs = pbw_count_oracle(d, g, b, 9);
        TruncatedSeries rhs = prenichols_series(d, g, b, 9);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("series arithmetic laws") {
    std::mt19937 rng(2024);
    auto random_series = [&](long long D) {
        TruncatedSeries s(2, D);
        for (int k = 0; k < 6; ++k) {
            DegreeVector d = dv({(long long)(rng() % 4), (long long)(rng() % 4)});
            s.add_coeff(d, Int((long long)(rng() % 7) - 3));
        }
        return s;
    };
    for (int t = 0; t < 50; ++t) {
        TruncatedSeries a = random_series(6), b = random_series(6), c = random_series(6);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
    }
    TruncatedSeries x(2, 5), y(2, 6);
    CHECK_THROWS_AS((void)(x == y), std::invalid_argument);
    CHECK_THROWS_AS((void)(x * y), std::invalid_argument);
}

TEST_CASE("gkdim and default degree") {
    CHECK(gkdim(0) == 0);
    CHECK(gkdim(0b10110) == 3);
    RootDatum d = a2_order3();
    CHECK(default_max_degree(d) == 2 * 6 + 4);
}
