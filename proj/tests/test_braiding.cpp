#include "doctest.h"

#include <algorithm>

#include "prenichols/braiding.hpp"

using namespace prenichols;

namespace {

DegreeVector dv(std::vector<long long> c) { return DegreeVector(std::move(c)); }

BraidingMatrix from_strings(std::vector<std::vector<std::string>> rows) {
    std::vector<std::vector<Scalar>> q;
    for (auto& row : rows) {
        std::vector<Scalar> r;
        for (auto& s : row) r.push_back(parse_scalar(s));
        q.push_back(std::move(r));
    }
    return BraidingMatrix(std::move(q));
}

// labels (-1,-1,-1), edges (xi, xi): the first exceptional g(2,3) diagram
BraidingMatrix g23_d1_matrix() {
    return from_strings({{"-1", "zeta(3)", "1"}, {"1", "-1", "zeta(3)"}, {"1", "1", "-1"}});
}

BraidingMatrix g23_d2_matrix() {
    return from_strings({{"-1", "zeta(3)^2", "1"}, {"1", "zeta(3)", "zeta(3)"}, {"1", "1", "-1"}});
}

BraidingMatrix g23_d3_matrix() {
    return from_strings({{"-1", "zeta(3)^2", "1"}, {"1", "zeta(6)", "zeta(3)^2"}, {"1", "1", "-1"}});
}

std::vector<DegreeVector> g23_d3_roots() {
    std::vector<DegreeVector> out;
    for (auto c : std::vector<std::vector<long long>>{{1, 0, 0}, {0, 1, 0}, {0, 0, 1},
                                                      {1, 1, 0}, {0, 1, 1}, {0, 2, 1},
                                                      {1, 1, 1}, {1, 2, 0}, {1, 2, 1}, {1, 3, 1}})
        out.push_back(dv(c));
    return out;
}

BraidingMatrix super_a3_2_matrix(long long N) {
    // labels (q, -1, q^{-1}), edge labels (q^{-1}, q)
    Scalar u = Scalar::root_of_unity(N);
    std::vector<std::vector<Scalar>> q{
        {u, u.inverse(), Scalar::one()},
        {Scalar::one(), Scalar::minus_one(), u},
        {Scalar::one(), Scalar::one(), u.inverse()}};
    return BraidingMatrix(std::move(q));
}

BraidingMatrix super_a3_123_matrix(long long N) {
    Scalar u = Scalar::root_of_unity(N);
    std::vector<std::vector<Scalar>> q{
        {Scalar::minus_one(), u, Scalar::one()},
        {Scalar::one(), Scalar::minus_one(), u.inverse()},
        {Scalar::one(), Scalar::one(), Scalar::minus_one()}};
    return BraidingMatrix(std::move(q));
}

} // namespace

TEST_CASE("bilinear form on a Cartan A2 braiding") {
    BraidingMatrix b = cartan_braiding(named_cartan_matrix("A2"), 3);
    CHECK(b.bilinear(dv({1, 0}), dv({0, 1})) == b.q(0, 1));
    DegreeVector a = dv({1, 0}), ap = dv({0, 1}), beta = dv({1, 1});
    CHECK(b.bilinear(a + ap, beta) == b.bilinear(a, beta) * b.bilinear(ap, beta));
    // q_{beta,beta} = q^{2-1-1+2} = q^2, of order 3
    CHECK(*b.root_order(beta) == 3);
    CHECK(*b.root_order(a) == 3);
}

TEST_CASE("root orders") {
    BraidingMatrix minus = from_strings({{"-1"}});
    CHECK(*minus.root_order(dv({1})) == 2);
    BraidingMatrix formal = from_strings({{"q"}});
    CHECK_FALSE(formal.root_order(dv({1})).has_value());
}

TEST_CASE("cartan roots") {
    BraidingMatrix b = cartan_braiding(named_cartan_matrix("A2"), 5);
    CHECK(b.is_cartan_root(dv({1, 0})));
    CHECK(b.is_cartan_root(dv({1, 1})));
    BraidingMatrix s = super_a3_2_matrix(5);
    CHECK_FALSE(s.is_cartan_root(dv({0, 1, 0})));
    CHECK(s.is_cartan_root(dv({1, 0, 0})));
    BraidingMatrix single = from_strings({{"zeta(7)^3"}});
    CHECK(single.is_cartan_root(dv({1})));
}

TEST_CASE("cartan_braiding validation") {
    CHECK_NOTHROW(cartan_braiding(named_cartan_matrix("A2"), 3));
    CHECK(cartan_braiding(named_cartan_matrix("A1"), 5).q(0, 0) == Scalar::root_of_unity(5, 2));
    CHECK_THROWS_AS(cartan_braiding(named_cartan_matrix("G2"), 3), std::invalid_argument);
    CHECK_THROWS_AS(cartan_braiding(named_cartan_matrix("A2"), 4), std::invalid_argument);
    CHECK_NOTHROW(cartan_braiding(named_cartan_matrix("G2"), 5));
}

TEST_CASE("diagram and twist equivalence") {
    BraidingMatrix b = cartan_braiding(named_cartan_matrix("A2"), 3);
    DynkinDiagram d = diagram(b);
    CHECK(d.edge.size() == 1);
    CHECK(d.vertex[0] == d.vertex[1]);

    // transpose has the same diagram
    std::vector<std::vector<Scalar>> qt(2, std::vector<Scalar>(2));
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) qt[i][j] = b.q(j, i);
    CHECK(twist_equivalent(b, BraidingMatrix(qt)));

    CHECK_FALSE(twist_equivalent(b, cartan_braiding(named_cartan_matrix("A2"), 9)));

    // moving a scalar across an edge keeps qtilde
    Scalar s = Scalar::root_of_unity(7);
    std::vector<std::vector<Scalar>> q2(2, std::vector<Scalar>(2));
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) q2[i][j] = b.q(i, j);
    q2[0][1] = q2[0][1] * s;
    q2[1][0] = q2[1][0] * s.inverse();
    CHECK(twist_equivalent(b, BraidingMatrix(q2)));

    // diagonal braiding with no edges
    BraidingMatrix diag = from_strings({{"zeta(3)", "1"}, {"1", "zeta(5)"}});
    CHECK(diagram(diag).edge.empty());

    // the g(2,3) d1 matrix: three -1 vertices, two xi edges
    DynkinDiagram d1 = diagram(g23_d1_matrix());
    CHECK(d1.vertex == std::vector<Scalar>(3, Scalar::minus_one()));
    CHECK(d1.edge.size() == 2);
}

TEST_CASE("components") {
    BraidingMatrix b = from_strings({{"1", "1", "1"}, {"1", "-1", "1"}, {"1", "1", "zeta(3)"}});
    Components c = components(b);
    CHECK(c.isolated_plus == std::vector<int>{0});
    CHECK(c.isolated_minus == std::vector<int>{1});
    REQUIRE(c.connected.size() == 1);
    CHECK(c.connected[0] == std::vector<int>{2});

    Components c1 = components(g23_d1_matrix());
    CHECK(c1.isolated_plus.empty());
    REQUIRE(c1.connected.size() == 1);
    CHECK(c1.connected[0].size() == 3);

    // two disjoint A2 blocks
    auto a2 = cartan_braiding(named_cartan_matrix("A2"), 3);
    std::vector<std::vector<Scalar>> q(4, std::vector<Scalar>(4, Scalar::one()));
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            q[i][j] = a2.q(i, j);
            q[i + 2][j + 2] = a2.q(i, j);
        }
    Components c2 = components(BraidingMatrix(q));
    CHECK(c2.connected.size() == 2);
}

TEST_CASE("datum: Cartan A2 at order 3 is the exceptional family") {
    RootDatum d = build_datum(cartan_braiding(named_cartan_matrix("A2"), 3));
    REQUIRE(d.comps.size() == 1);
    CHECK(d.comps[0].family == FamilyTag::A2_G3);
    auto h = d.hOc();
    std::vector<DegreeVector> expect{dv({3, 0}), dv({3, 3}), dv({0, 3}), dv({2, 1}), dv({1, 2})};
    std::sort(expect.begin(), expect.end(), HeightLexLess{});
    CHECK(h == expect);
    CHECK(h.size() == 5);
    CHECK(d.hOc_bold().size() == 2);
}

TEST_CASE("datum: Cartan A2 at order 5 is distinguished") {
    RootDatum d = build_datum(cartan_braiding(named_cartan_matrix("A2"), 5));
    REQUIRE(d.comps.size() == 1);
    CHECK(d.comps[0].family == FamilyTag::distinguished);
    std::vector<DegreeVector> expect{dv({5, 0}), dv({0, 5}), dv({5, 5})};
    std::sort(expect.begin(), expect.end(), HeightLexLess{});
    CHECK(d.hOc() == expect);
    CHECK(d.hOc_bold().empty());
}

TEST_CASE("datum: g(2,3) rows") {
    RootDatum d1 = build_datum(g23_d1_matrix());
    REQUIRE(d1.comps.size() == 1);
    CHECK(d1.comps[0].family == FamilyTag::g23_d1);
    std::vector<DegreeVector> expect{dv({3, 3, 0}), dv({3, 6, 3}), dv({0, 3, 3}),
                                     dv({6, 6, 6}), dv({2, 3, 1}), dv({1, 3, 2})};
    std::sort(expect.begin(), expect.end(), HeightLexLess{});
    CHECK(d1.hOc() == expect);
    CHECK(d1.all_positive_roots().size() == 10);

    RootDatum d2 = build_datum(g23_d2_matrix());
    CHECK(d2.comps[0].family == FamilyTag::g23_d2);
    std::vector<DegreeVector> expect2{dv({3, 3, 3}), dv({3, 6, 3}), dv({0, 3, 0}),
                                      dv({0, 6, 6}), dv({1, 3, 1}), dv({2, 3, 2})};
    std::sort(expect2.begin(), expect2.end(), HeightLexLess{});
    CHECK(d2.hOc() == expect2);

    // mirrored vertex order must recognize too
    std::vector<std::vector<Scalar>> q(3, std::vector<Scalar>(3));
    BraidingMatrix src = g23_d2_matrix();
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) q[i][j] = src.q(2 - i, 2 - j);
    RootDatum d2m = build_datum(BraidingMatrix(q));
    CHECK(d2m.comps[0].family == FamilyTag::g23_d2);
    auto mirrored = d2m.hOc();
    std::vector<DegreeVector> expect2m;
    for (const auto& v : expect2) expect2m.push_back(dv({v[2], v[1], v[0]}));
    std::sort(expect2m.begin(), expect2m.end(), HeightLexLess{});
    CHECK(mirrored == expect2m);
}

TEST_CASE("datum: super A3 rows") {
    for (long long N : {3LL, 5LL, 7LL}) {
        RootDatum d = build_datum(super_a3_2_matrix(N));
        REQUIRE(d.comps.size() == 1);
        CHECK(d.comps[0].family == FamilyTag::superA3_2);
        std::vector<DegreeVector> expect{dv({N, 0, 0}), dv({0, 0, N}), dv({1, 2, 1})};
        std::sort(expect.begin(), expect.end(), HeightLexLess{});
        CHECK(d.hOc() == expect);
        CHECK(d.all_positive_roots().size() == 6);
    }
    RootDatum d = build_datum(super_a3_123_matrix(5));
    CHECK(d.comps[0].family == FamilyTag::superA3_123);
    std::vector<DegreeVector> expect{dv({5, 5, 0}), dv({0, 5, 5}), dv({1, 0, 1})};
    std::sort(expect.begin(), expect.end(), HeightLexLess{});
    CHECK(d.hOc() == expect);
}

TEST_CASE("datum: d3 needs supplied roots and yields the A2xA1 set") {
    BraidingMatrix b = g23_d3_matrix();
    CHECK_THROWS_AS(build_datum(b), std::invalid_argument);
    RootDatum d = build_datum(b, g23_d3_roots());
    REQUIRE(d.comps.size() == 1);
    CHECK(d.comps[0].family == FamilyTag::distinguished);
    std::vector<DegreeVector> expect{dv({3, 3, 0}), dv({3, 6, 3}), dv({0, 3, 3}), dv({0, 6, 0})};
    std::sort(expect.begin(), expect.end(), HeightLexLess{});
    CHECK(d.hOc() == expect);

    auto basis = underline_basis(d.hOc());
    std::vector<DegreeVector> expect_basis{dv({3, 3, 0}), dv({0, 3, 3}), dv({0, 6, 0})};
    std::sort(expect_basis.begin(), expect_basis.end(), HeightLexLess{});
    std::sort(basis.begin(), basis.end(), HeightLexLess{});
    CHECK(basis == expect_basis);
}

TEST_CASE("underline basis") {
    std::vector<DegreeVector> s{dv({5, 0}), dv({5, 5}), dv({0, 5})};
    auto b = underline_basis(s);
    CHECK(b.size() == 2);
    std::vector<DegreeVector> single{dv({1, 2})};
    CHECK(underline_basis(single) == single);
}

TEST_CASE("distinguished family: underline basis recovers a simple system") {
    RootDatum d = build_datum(cartan_braiding(named_cartan_matrix("B2"), 5));
    auto basis = underline_basis(d.hOc());
    std::sort(basis.begin(), basis.end(), HeightLexLess{});
    std::vector<DegreeVector> expect{dv({0, 5}), dv({5, 0})};
    CHECK(basis == expect); // 5 * {alpha_1, alpha_2}
}

TEST_CASE("datum rejections") {
    // isolated +-1 vertices
    BraidingMatrix iso = from_strings({{"1", "1"}, {"1", "zeta(3)"}});
    CHECK_THROWS_WITH_AS(build_datum(iso), doctest::Contains("isolated"), std::invalid_argument);
    // Cartan A2 with label -1 everywhere
    BraidingMatrix ad = from_strings({{"-1", "-1"}, {"1", "-1"}});
    CHECK_THROWS_WITH_AS(build_datum(ad), doctest::Contains("Cartan type A/D"), std::invalid_argument);
    // D4 shape all -1
    std::vector<std::vector<Scalar>> q(4, std::vector<Scalar>(4, Scalar::one()));
    for (int i = 0; i < 4; ++i) q[i][i] = Scalar::minus_one();
    q[0][1] = q[1][2] = q[1][3] = Scalar::minus_one();
    CHECK_THROWS_WITH_AS(build_datum(BraidingMatrix(q)), doctest::Contains("Cartan type A/D"),
                         std::invalid_argument);
    // unrecognized component without roots
    BraidingMatrix weird = from_strings({{"zeta(5)", "zeta(7)", "1"},
                                         {"1", "zeta(5)", "zeta(7)"},
                                         {"1", "1", "zeta(5)"}});
    CHECK_THROWS_WITH_AS(build_datum(weird), doctest::Contains("not a built-in"),
                         std::invalid_argument);
    // infinite-order single vertex
    BraidingMatrix formal = from_strings({{"q"}});
    CHECK_THROWS_AS(build_datum(formal), std::invalid_argument);
}

TEST_CASE("disconnected datum equals the union of its parts") {
    auto a2 = cartan_braiding(named_cartan_matrix("A2"), 3);
    std::vector<std::vector<Scalar>> q(5, std::vector<Scalar>(5, Scalar::one()));
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) q[i][j] = a2.q(i, j);
    BraidingMatrix s = super_a3_2_matrix(5);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) q[i + 2][j + 2] = s.q(i, j);
    RootDatum d = build_datum(BraidingMatrix(q));
    REQUIRE(d.comps.size() == 2);
    CHECK(d.comps[0].family == FamilyTag::A2_G3);
    CHECK(d.comps[1].family == FamilyTag::superA3_2);
    CHECK(d.hOc().size() == 8);
}

TEST_CASE("twist-equivalent braidings produce identical data") {
    BraidingMatrix b = super_a3_2_matrix(5);
    // push scalars across the edges: qtilde fixed
    std::vector<std::vector<Scalar>> q(3, std::vector<Scalar>(3));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) q[i][j] = b.q(i, j);
    Scalar s = Scalar::root_of_unity(11, 4);
    q[0][1] = q[0][1] * s;
    q[1][0] = q[1][0] * s.inverse();
    BraidingMatrix b2(q);
    REQUIRE(twist_equivalent(b, b2));
    RootDatum d1 = build_datum(b), d2 = build_datum(b2);
    CHECK(d1.hOc() == d2.hOc());
    CHECK(d1.all_positive_roots() == d2.all_positive_roots());
    CHECK(d1.all_N_beta() == d2.all_N_beta());
    CHECK(d1.all_cartan_flags() == d2.all_cartan_flags());
}
