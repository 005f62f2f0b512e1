#include "dgcalc/parse.hpp"

#include "dgcalc/error.hpp"
#include "dgcalc/workspace.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace dgcalc;
using namespace dgtest;

TEST_CASE("minimal chart file") {
    DgChart c = parse_chart("chart M\nbase x\ngen xi : -1\nd xi = x\n");
    CHECK(c.name == "M");
    CHECK(c.table->size() == 2);
    CHECK(c.d_value(*c.table->find("xi")).str() == "x");
    CHECK(validate_chart(c).ok);
}

TEST_CASE("missing d line defaults to zero") {
    DgChart c = parse_chart("chart M\nbase x\ngen xi : -1\n");
    CHECK(c.d_value(*c.table->find("xi")).is_zero());
}

TEST_CASE("rejects a positive generator degree") {
    CHECK_THROWS_AS(parse_chart_text("chart M\ngen xi : 1\n"), ParseError);
    CHECK_THROWS_AS(parse_chart_text("chart M\ngen xi : 0\n"), ParseError);
}

TEST_CASE("distinct error classes with positions") {
    // syntax error
    try {
        parse_chart_text("chart M\nbase x +\n");
        FAIL("expected throw");
    } catch (const ParseError& e) {
        CHECK(e.line == 2);
        CHECK(std::string(e.what()).find("syntax error") != std::string::npos);
    }
    // unknown identifier in a d-line
    try {
        parse_chart_text("chart M\nbase x\ngen xi : -1\nd nope = x\n");
        FAIL("expected throw");
    } catch (const ParseError& e) {
        CHECK(e.line == 4);
        CHECK(std::string(e.what()).find("unknown identifier") != std::string::npos);
    }
    // unknown variable inside an expression
    CHECK_THROWS_AS(parse_chart_text("chart M\nbase x\ngen xi : -1\nd xi = y\n"), ParseError);
    // square-zero failure reported at the offending d line
    try {
        parse_chart("chart M\nbase x\ngen xi : -1\ngen eta : -2\nd eta = xi\nd xi = x\n");
        FAIL("expected throw");
    } catch (const ParseError& e) {
        CHECK(e.line == 5);
        CHECK(std::string(e.what()).find("not cohomological") != std::string::npos);
    }
    // degree violation inside a d value
    CHECK_THROWS_AS(parse_chart("chart M\nbase x\ngen xi : -1\nd xi = xi\n"), ParseError);
}

TEST_CASE("polynomial grammar corners") {
    auto t = make_table({{"xi", -1}, {"x", 0}});
    CHECK(parse_polynomial("2/3*x^2 - x + 1", t).str() == "1 - x + 2/3*x^2");
    CHECK(parse_polynomial("-x", t).str() == "-x");
    CHECK(parse_polynomial("(x + 1) * (x - 1)", t).str() == "-1 + x^2");
    CHECK(parse_polynomial("0", t).is_zero());
    CHECK_THROWS_AS(parse_polynomial("x y", t), ParseError);      // juxtaposition
    CHECK_THROWS_AS(parse_polynomial("(x+1)^2", t), ParseError);  // ^ on single variables only
    CHECK_THROWS_AS(parse_polynomial("2^3", t), ParseError);
    CHECK_THROWS_AS(parse_polynomial("x^", t), ParseError);
    CHECK_THROWS_AS(parse_polynomial("1/0", t), ParseError);
}

TEST_CASE("chart print and reparse is the identity") {
    Rng rng(111);
    for (int trial = 0; trial < 30; ++trial) {
        auto t = make_table({{"eta", -2}, {"xi1", -1}, {"xi2", -1}, {"x", 0}, {"y", 0}});
        std::vector<GradedPolynomial> values(t->size(), GradedPolynomial::zero(t));
        values[*t->find("xi1")] = random_homogeneous(rng, t, 0, 2);
        values[*t->find("eta")] = random_homogeneous(rng, t, -1, 2);
        DgChart c("R", t, Derivation(t, 1, std::move(values)));
        if (!validate_chart(c).ok) continue;
        std::string text = print_chart(c);
        DgChart back = parse_chart(text);
        CHECK(*back.table == *c.table);
        CHECK(back.d == c.d);
        CHECK(print_chart(back) == text);
    }
}

TEST_CASE("morphism files and workspace") {
    Workspace ws;
    ws.load_text("chart M\nbase x\ngen xi : -1\nd xi = x\n", "m");
    ws.load_text("chart N\nbase y\ngen eta : -1\nd eta = y^2\n", "n");
    ws.load_text("map f : M -> N\nsend y = x\nsend eta = x*xi\n", "f");
    const DgMorphism& f = ws.morphism("f");
    CHECK(f.source->name == "M");
    CHECK(f.target->name == "N");
    CHECK(check_morphism(f).ok);
    std::string printed = print_morphism(f);
    DgMorphism back = parse_morphism(printed, ws);
    CHECK(back.images == f.images);

    // invalid morphisms are rejected at load time
    CHECK_THROWS(ws.load_text("map g : M -> N\nsend y = x\nsend eta = xi\n", "g"));
    // duplicate names are rejected
    CHECK_THROWS(ws.load_text("chart M\nbase z\n", "dup"));
}

TEST_CASE("points sections and linfty files") {
    std::vector<Point> pts = parse_points("point x=1, y=2/3\npoint x=-1, y=0\n");
    REQUIRE(pts.size() == 2);
    CHECK(pts[0].at("y") == Rational(BigInt(2), BigInt(3)));
    CHECK(pts[1].at("x") == Rational(-1));
    CHECK(print_point(pts[0]) == "point x=1, y=2/3\n");

    Workspace ws;
    ws.load_text("chart R\nbase x\n", "r");
    ws.load_text("section s over R\nslot e : 0\nval e = x^2\n", "s");
    const Section& s = ws.section("s");
    CHECK(s.slots.size() == 1);
    CHECK(print_section("s", s) == "section s over R\nslot e : 0\nval e = x^2\n");

    ws.load_text("linfty L\nbase x\nelem e : 1\nelem f : 2\nbracket e <= : x\nbracket f <= e : 2\n", "l");
    const CurvedLInfty& l = ws.linfty_data("L");
    CHECK(l.basis.size() == 2);
    CHECK(l.brackets.size() == 2);
    std::string printed = print_linfty(l);
    CurvedLInfty back = parse_linfty(printed);
    CHECK(back.brackets == l.brackets);
    CHECK(print_linfty(back) == printed);
}
