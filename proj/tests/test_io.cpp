#include "doctest.h"
#include "planept/io.hpp"

using namespace planept;

TEST_CASE("scheme fixtures round trip") {
    const std::string text =
        "field: Q[w]/(w^2+w+1)\n"
        "# the three coordinate vertices and a cyclotomic point\n"
        "point: 1 0 0 mult 1\n"
        "point: 0 1 0 mult 2\n"
        "point: 1 w 1 mult 1\n"
        "point: 1/2 -3 1 mult 3\n";
    FatPointScheme Z = parse_scheme_text(text);
    CHECK(Z.size() == 4);
    CHECK(Z.points()[1].mult == 2);
    CHECK(Z.points()[2].p[1] == Z.field().generator());
    // serialize and reparse: identical schemes
    FatPointScheme Z2 = parse_scheme_text(scheme_to_text(Z));
    REQUIRE(Z2.size() == Z.size());
    for (size_t i = 0; i < Z.size(); ++i) {
        CHECK(Z2.points()[i].p == Z.points()[i].p);
        CHECK(Z2.points()[i].mult == Z.points()[i].mult);
    }
}

TEST_CASE("arrangement fixtures round trip with multiplicities and realizability") {
    const std::string text =
        "field: Q\n"
        "realizable_over: R\n"
        "line: 1 0 0\n"
        "line: 0 1 0 mult 2\n"
        "line: 1 1 -3/2\n";
    LineArrangement A = parse_arrangement_text(text);
    CHECK(A.size() == 3);
    CHECK(A.declared_real());
    CHECK(A.lines()[1].mult == 2);
    LineArrangement B = parse_arrangement_text(arrangement_to_text(A));
    CHECK(B.declared_real());
    CHECK(B.lines()[2].form[2] == A.field().from_rational(Rational(-3, 2)));
}

TEST_CASE("curve system fixtures: classes and Gram matrices") {
    const std::string classes =
        "points: 2\n"
        "curve: H L - E1 - E2\n"
        "curve: E1 E1\n"
        "curve: E2 E2\n";
    CurveSystem C = parse_system_text(classes);
    CHECK(C.size() == 3);
    CHECK(C.points() == 2);
    CHECK(C.name(0) == "H");
    CHECK(C.gram()[0][0] == Rational(-1));

    const std::string gram =
        "gramrow: -2 1\n"
        "gramrow: 1 -2\n";
    CurveSystem G = parse_system_text(gram);
    CHECK(!G.has_classes());
    CHECK(G.gram()[0][1] == Rational(1));

    CHECK_THROWS_WITH_AS(parse_system_text("points: 1\ncurve: X L\ngramrow: -1\n"),
                         doctest::Contains("BadFixture"), Error);
}

TEST_CASE("bad fixtures are reported with the input context") {
    CHECK_THROWS_WITH_AS(parse_scheme_text("point: 1 0 0 mult 1\n"),
                         doctest::Contains("field"), Error);
    CHECK_THROWS_WITH_AS(parse_scheme_text("field: Q\npoint: 1 0 mult 1\n"),
                         doctest::Contains("BadFixture"), Error);
    CHECK_THROWS_WITH_AS(parse_scheme_text("field: Q\npoint: 1 0 0 mult 1\npoint: 2 0 0 mult 1\n"),
                         doctest::Contains("repeated point"), Error);
    CHECK_THROWS_WITH_AS(parse_arrangement_text("field: Q\nline: 1 0 0\nline: 2 0 0\n"),
                         doctest::Contains("projectively equal"), Error);
}

TEST_CASE("checksums are stable") {
    CHECK(fnv1a_hex("") == "cbf29ce484222325");
    CHECK(fnv1a_hex("a") != fnv1a_hex("b"));
}

TEST_CASE("reports print deterministically") {
    Report r;
    r.add("alpha", 4ul);
    r.add("waldschmidt-upper", Rational(15, 6));
    CHECK(r.text() == "alpha: 4\nwaldschmidt-upper: 5/2\n");
}
