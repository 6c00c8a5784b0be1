#include "doctest.h"

#include <cstdio>
#include <fstream>

#include "prenichols/io.hpp"

using namespace prenichols;

namespace {

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& name, const std::string& content)
        : path("/tmp/prenichols_test_" + name) {
        std::ofstream out(path);
        out << content;
    }
    ~TempFile() { std::remove(path.c_str()); }
};

} // namespace

TEST_CASE("braiding files round trip") {
    TempFile f("a2.json", R"json({
      "theta": 2,
      "entries": [["zeta(3)^2", "zeta(3)^-1"], ["zeta(3)^-1", "zeta(3)^2"]]
    })json");
    BraidingMatrix b = load_braiding_file(f.path);
    CHECK(b.size() == 2);
    CHECK(b.q(0, 0) == Scalar::root_of_unity(3, 2));
    save_braiding_file("/tmp/prenichols_test_roundtrip.json", b);
    BraidingMatrix b2 = load_braiding_file("/tmp/prenichols_test_roundtrip.json");
    CHECK(b == b2);
    std::remove("/tmp/prenichols_test_roundtrip.json");
}

TEST_CASE("datum file with roots, orders, flags") {
    TempFile f("d3.json", R"json({
      "braiding": {
        "theta": 3,
        "entries": [["-1", "zeta(3)^2", "1"], ["1", "zeta(6)", "zeta(3)^2"], ["1", "1", "-1"]]
      },
      "positive_roots": [[1,0,0],[0,1,0],[0,0,1],[1,1,0],[0,1,1],[0,2,1],[1,1,1],[1,2,0],[1,2,1],[1,3,1]],
      "N_beta": [2,6,2,3,3,2,2,2,3,2],
      "cartan_flags": [false,true,false,true,true,false,false,false,true,false]
    })json");
    RootDatum d = load_datum(f.path);
    CHECK(d.comps.size() == 1);
    CHECK(d.hOc().size() == 4);
}

TEST_CASE("wrong N_beta is rejected") {
    TempFile f("bad.json", R"json({
      "braiding": {"theta": 1, "entries": [["zeta(5)"]]},
      "positive_roots": [[1]],
      "N_beta": [3]
    })json");
    CHECK_THROWS_AS(load_datum(f.path), std::invalid_argument);
}

TEST_CASE("malformed JSON is an input error") {
    TempFile f("broken.json", R"json({ "theta": 2, "entries": [["1", )json");
    CHECK_THROWS_AS(load_datum(f.path), std::invalid_argument);
}

TEST_CASE("family tag validation") {
    TempFile g("a2g3b.json", R"json({
      "braiding": {
        "theta": 2,
        "entries": [["zeta(3)^2", "zeta(3)"], ["1", "zeta(3)^2"]]
      },
      "family_tag": "A2_G3"
    })json");
    RootDatum d = load_datum(g.path);
    CHECK(d.comps[0].family == FamilyTag::A2_G3);

    TempFile h("a2g3c.json", R"json({
      "braiding": {
        "theta": 2,
        "entries": [["zeta(3)^2", "zeta(3)"], ["1", "zeta(3)^2"]]
      },
      "family_tag": "distinguished"
    })json");
    CHECK_THROWS_AS(load_datum(h.path), std::invalid_argument);
}

TEST_CASE("plain braiding file also loads as a datum") {
    TempFile f("plain.json", R"json({"theta": 1, "entries": [["zeta(7)"]]})json");
    RootDatum d = load_datum(f.path);
    CHECK(d.hOc().size() == 1);
    CHECK(height(d.hOc()[0]) == 7);
}

TEST_CASE("missing file") {
    CHECK_THROWS_AS(load_braiding_file("/nonexistent/x.json"), std::invalid_argument);
}
