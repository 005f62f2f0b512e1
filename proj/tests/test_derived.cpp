#include "dgcalc/derived.hpp"

#include "dgcalc/error.hpp"
#include "dgcalc/oracle.hpp"
#include "dgcalc/parse.hpp"
#include "dgcalc/tangent.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace dgcalc;
using namespace dgtest;

namespace {

// every generator v of the middle chart: [D, Gamma](v) == endo*(v) - v
void check_homotopy_identity(const FactorizationResult& fact) {
    Derivation bracket = commutator(fact.middle->d, fact.homotopy);
    DgMorphism endo = compose(fact.section, fact.r);  // pullback is phi . r
    for (int v = 0; v < fact.middle->table->size(); ++v) {
        GradedPolynomial expect =
            endo.images[v] - GradedPolynomial::variable(fact.middle->table, v);
        CHECK(bracket.value(v) == expect);
    }
}

void check_factorization(const DgMorphism& f, const FactorizationResult& fact) {
    CHECK(validate_chart(*fact.middle).ok);
    CHECK(check_morphism(fact.q).ok);
    CHECK(check_morphism(fact.r).ok);
    CHECK(check_morphism(fact.section).ok);
    // r . phi = id_B and (algebra-level) r . q = f, i.e. q . section = f here
    DgMorphism rs = compose(fact.r, fact.section);
    CHECK(rs.images == identity_morphism(f.source).images);
    DgMorphism qs = compose(fact.q, fact.section);
    CHECK(qs.images == f.images);
    check_homotopy_identity(fact);
}

}  // namespace

TEST_CASE("shifted zero locus examples") {
    ChartPtr line = make_chart_ptr(make_chart("R", {{"x", 0}}));

    // zero section of the trivial line bundle: one degree -1 generator, D = 0
    Section zero{line, {{"e", 0, GradedPolynomial::zero(line->table)}}};
    DgChart shift = shifted_zero_locus(zero, "R_shift");
    CHECK(validate_chart(shift).ok);
    CHECK(shift.amplitude() == 1);
    CHECK(shift.d_value(*shift.table->find("e")).is_zero());

    // s(x) = x: derived point with acyclic tangent complex
    Section sx{line, {{"e", 0, parse_polynomial("x", line->table)}}};
    DgChart pt = shifted_zero_locus(sx, "pt");
    CochainComplex t1 = tangent_complex(pt, {{"x", Rational(0)}});
    CHECK(cohomology_dims(t1) == std::vector<int>{0, 0});

    // s(x) = x^2: tangent dims (1,1) with zero differential
    Section sxx{line, {{"e", 0, parse_polynomial("x^2", line->table)}}};
    DgChart dbl = shifted_zero_locus(sxx, "dbl");
    IdealPresentation ideal = classical_locus_ideal(dbl);
    REQUIRE(ideal.generators.size() == 1);
    CHECK(ideal.generators[0].str() == "x^2");
    CochainComplex t2 = tangent_complex(dbl, {{"x", Rational(0)}});
    CHECK(t2.dims == std::vector<int>{1, 1});
    CHECK(t2.d[0].is_zero());
    CHECK(cohomology_dims(t2) == std::vector<int>{1, 1});

    // the degree-0 linearization equals the symbolic Jacobian of the section
    CHECK(evaluate_at_core(left_partial(sxx.slots[0].component, *line->table->find("x")),
                           {{"x", Rational(0)}}) == t2.d[0].at(0, 0));
}

TEST_CASE("factorize the identity on a line") {
    ChartPtr line = make_chart_ptr(make_chart("A", {{"x", 0}}));
    DgMorphism f = identity_morphism(line);
    FactorizationResult fact = factorize(f);
    check_factorization(f, fact);

    // middle chart: x, its bar companion, and the renamed source copy
    REQUIRE(fact.middle->table->size() == 3);
    const std::string bar = fact.bar_names[0];
    const std::string copy = fact.source_names.at("x");
    CHECK(fact.middle->table->var(*fact.middle->table->find(bar)).degree == -1);
    GradedPolynomial dbar = fact.middle->d_value(*fact.middle->table->find(bar));
    CHECK(dbar == parse_polynomial(copy + " - x", fact.middle->table));

    // H^0 = Q[x, copy]/(copy - x): one stable unit in degree 0 per base degree
    TruncationSpec spec;
    spec.max_base_degree = 2;
    spec.window_min = -1;
    OracleResult r = bounded_cohomology(*fact.middle, spec);
    CHECK(r.h_at(-1) == 0);
    CHECK(r.h_at(0) == 3);  // truncated quotient basis 1, x, x^2
}

TEST_CASE("factorize a point inclusion (empty source chart)") {
    ChartPtr point = make_chart_ptr(make_chart("P", {}));
    ChartPtr line = make_chart_ptr(make_chart("B", {{"y", 0}}));
    // geometric map point -> line at y = 0: pullback sends y to 0
    DgMorphism f;
    f.name = "origin";
    f.source = point;
    f.target = line;
    f.images = {GradedPolynomial::zero(point->table)};
    REQUIRE(check_morphism(f).ok);
    FactorizationResult fact = factorize(f);
    check_factorization(f, fact);
    CHECK(fact.middle->table->size() == 2);  // y and y_bar, no source generators
}

TEST_CASE("factorize x -> y^2 and the chain homotopy identity") {
    ChartPtr a = make_chart_ptr(make_chart("A", {{"x", 0}}));
    ChartPtr b = make_chart_ptr(make_chart("B", {{"y", 0}}));
    DgMorphism f;
    f.name = "square";
    f.source = b;
    f.target = a;
    f.images = {parse_polynomial("y^2", b->table)};
    REQUIRE(check_morphism(f).ok);
    FactorizationResult fact = factorize(f);
    check_factorization(f, fact);
    GradedPolynomial dbar =
        fact.middle->d_value(*fact.middle->table->find(fact.bar_names[0]));
    CHECK(dbar == parse_polynomial("y^2 - x", fact.middle->table));

    // trivial-fibration leg: weak equivalence and fibration at the origin probe
    Point origin{{"x", Rational(0)}, {"y", Rational(0)}};
    CHECK(is_pointwise_weq(fact.r, {origin}).ok);
    CHECK(is_fibration_at(fact.r, {origin}).ok);
    // and the quasi-free leg is a fibration as well
    CHECK(is_fibration_at(fact.q, {origin}).ok);
}

TEST_CASE("factorize rejects a nonlinear source differential along a collapsing map") {
    ChartPtr k = make_chart_ptr(make_chart("K", {{"x", 0}, {"xi", -1}}, {{"xi", "x^2"}}));
    ChartPtr point = make_chart_ptr(make_chart("P", {}));
    DgMorphism f;
    f.name = "collapse";
    f.source = point;
    f.target = k;
    f.images = {GradedPolynomial::zero(point->table), GradedPolynomial::zero(point->table)};
    REQUIRE(check_morphism(f).ok);
    CHECK_THROWS_AS(factorize(f), DgError);
}

TEST_CASE("transverse axes meet in a derived point") {
    ChartPtr xaxis = make_chart_ptr(make_chart("X", {{"x", 0}}));
    ChartPtr yaxis = make_chart_ptr(make_chart("Y", {{"y", 0}}));
    ChartPtr plane = make_chart_ptr(make_chart("N", {{"u", 0}, {"v", 0}}));
    DgMorphism f;  // x-axis: u = x, v = 0
    f.name = "xaxis";
    f.source = xaxis;
    f.target = plane;
    f.images = {parse_polynomial("x", xaxis->table), GradedPolynomial::zero(xaxis->table)};
    DgMorphism g;  // y-axis: u = 0, v = y
    g.name = "yaxis";
    g.source = yaxis;
    g.target = plane;
    g.images = {GradedPolynomial::zero(yaxis->table), parse_polynomial("y", yaxis->table)};
    REQUIRE(check_morphism(f).ok);
    REQUIRE(check_morphism(g).ok);

    PullbackResult pb = homotopy_pullback(f, g, "XY");
    CHECK(validate_chart(*pb.chart).ok);
    CHECK(check_morphism(pb.to_left).ok);
    CHECK(check_morphism(pb.to_right).ok);
    CHECK(is_fibration_at(pb.to_left, {Point{{"x", Rational(0)}, {"y", Rational(0)}}}).ok);

    Point origin;
    for (int i : pb.chart->table->base_indices()) origin[pb.chart->table->var(i).name] = Rational(0);
    REQUIRE(is_classical_point(*pb.chart, origin));
    CochainComplex tc = tangent_complex(*pb.chart, origin);
    CHECK(is_acyclic(tc));

    // H^0 cuts out a single point: both ideal generators are independent linear forms
    IdealPresentation ideal = classical_locus_ideal(*pb.chart);
    CHECK(ideal.generators.size() == 2);
}

TEST_CASE("parabola against the axis is the double point") {
    ChartPtr para = make_chart_ptr(make_chart("C", {{"x", 0}}));
    ChartPtr axis = make_chart_ptr(make_chart("H", {{"y", 0}}));
    ChartPtr plane = make_chart_ptr(make_chart("N", {{"u", 0}, {"v", 0}}));
    DgMorphism f;  // parabola: u = x, v = x^2
    f.name = "para";
    f.source = para;
    f.target = plane;
    f.images = {parse_polynomial("x", para->table), parse_polynomial("x^2", para->table)};
    DgMorphism g;  // horizontal axis: u = y, v = 0
    g.name = "axis";
    g.source = axis;
    g.target = plane;
    g.images = {parse_polynomial("y", axis->table), GradedPolynomial::zero(axis->table)};
    REQUIRE(check_morphism(f).ok);
    REQUIRE(check_morphism(g).ok);

    PullbackResult pb = homotopy_pullback(f, g, "CH");
    CHECK(validate_chart(*pb.chart).ok);
    Point origin;
    for (int i : pb.chart->table->base_indices()) origin[pb.chart->table->var(i).name] = Rational(0);
    REQUIRE(is_classical_point(*pb.chart, origin));
    CochainComplex tc = tangent_complex(*pb.chart, origin);
    CHECK(cohomology_dims(tc) == std::vector<int>{1, 1});

    // the presentation contains the expected double-point generator
    bool has_square = false;
    for (const auto& gpoly : classical_locus_ideal(*pb.chart).generators) {
        std::string s = gpoly.str();
        if (s == "x^2" || s == "-x^2") has_square = true;
    }
    CHECK(has_square);

    // same dims as the shifted zero locus of x^2
    ChartPtr line = make_chart_ptr(make_chart("R", {{"x", 0}}));
    Section sxx{line, {{"e", 0, parse_polynomial("x^2", line->table)}}};
    DgChart dbl = shifted_zero_locus(sxx, "dbl");
    CHECK(cohomology_dims(tangent_complex(dbl, {{"x", Rational(0)}})) == cohomology_dims(tc));
}

TEST_CASE("pullback along the identity is a weak equivalence onto the source") {
    ChartPtr k = make_chart_ptr(make_chart("K", {{"x", 0}, {"xi", -1}}, {{"xi", "x"}}));
    DgMorphism f = identity_morphism(k);
    DgMorphism g = identity_morphism(k);
    PullbackResult pb = homotopy_pullback(f, g, "KK");
    CHECK(validate_chart(*pb.chart).ok);
    CHECK(check_morphism(pb.to_left).ok);
    CHECK(check_morphism(pb.to_right).ok);
    Point origin;
    for (int i : pb.chart->table->base_indices()) origin[pb.chart->table->var(i).name] = Rational(0);
    REQUIRE(is_classical_point(*pb.chart, origin));
    CHECK(is_pointwise_weq(pb.to_left, {origin}).ok);
    CHECK(is_fibration_at(pb.to_left, {origin}).ok);
}

TEST_CASE("decomposition towers") {
    DgChart manifold = make_chart("M", {{"x", 0}, {"y", 0}});
    Decomposition d0 = decompose(manifold);
    CHECK(d0.stages.empty());
    CHECK(*d0.rebuilt.table == *manifold.table);

    DgChart k = make_chart("K", {{"x", 0}, {"xi", -1}}, {{"xi", "x"}});
    Decomposition d1 = decompose(k);
    REQUIRE(d1.stages.size() == 1);
    CHECK(d1.stages[0].chart.table->size() == 1);  // the base line
    REQUIRE(d1.stages[0].next.slots.size() == 1);
    CHECK(d1.stages[0].next.slots[0].component.str() == "x");
    CHECK(*d1.rebuilt.table == *k.table);
    CHECK(d1.rebuilt.d == k.d);
    CHECK(check_morphism(d1.to_input).ok);
    CHECK(check_morphism(d1.from_input).ok);

    DgChart two = make_chart("W", {{"x", 0}, {"xi1", -1}, {"xi2", -1}, {"eta", -2}},
                             {{"xi1", "x"}, {"xi2", "x"}, {"eta", "xi1 - xi2"}});
    REQUIRE(validate_chart(two).ok);
    Decomposition d2 = decompose(two);
    REQUIRE(d2.stages.size() == 2);
    CHECK(d2.stages[1].chart.table->size() == 3);  // x, xi1, xi2
    REQUIRE(d2.stages[1].next.slots.size() == 1);
    CHECK(d2.stages[1].next.slots[0].component.str() == "xi1 - xi2");
    CHECK(*d2.rebuilt.table == *two.table);
    CHECK(d2.rebuilt.d == two.d);
    DgMorphism round = compose(d2.to_input, d2.from_input);
    CHECK(round.images == identity_morphism(make_chart_ptr(two)).images);
}

TEST_CASE("random factorizations of linear-differential charts") {
    Rng rng(2024);
    for (int trial = 0; trial < 25; ++trial) {
        // target chart A: base a1, fiber u (deg -1) with linear differential
        ChartPtr a = make_chart_ptr(make_chart(
            "A", {{"a1", 0}, {"u", -1}}, {{"u", trial % 2 ? "a1" : "0"}}));
        // source chart B: base b1, fiber w (deg -1), zero differential
        ChartPtr b = make_chart_ptr(make_chart("B", {{"b1", 0}, {"w", -1}}));
        DgMorphism f;
        f.name = "rnd";
        f.source = b;
        f.target = a;
        f.images.assign(a->table->size(), GradedPolynomial::zero(b->table));
        // base image without constant term, fiber image linear in w
        std::string base_expr = trial % 3 == 0 ? "b1^2" : "b1 + b1^2";
        f.images[*a->table->find("a1")] = parse_polynomial(base_expr, b->table);
        if (trial % 2 == 0)
            f.images[*a->table->find("u")] =
                Rational(rng.uniform(-2, 2)) * GradedPolynomial::variable(b->table, *b->table->find("w"));
        // chain condition: D(image of u) must equal pullback(D u)
        if (!check_morphism(f).ok) continue;
        FactorizationResult fact = factorize(f);
        check_factorization(f, fact);
    }
}

TEST_CASE("zero-locus linearization equals the symbolic Jacobian") {
    Rng rng(515);
    for (int trial = 0; trial < 20; ++trial) {
        auto bt = make_table({{"x", 0}, {"y", 0}});
        ChartPtr base = make_chart_ptr(DgChart("B", bt, Derivation::zero(bt, 1)));
        Section s;
        s.chart = base;
        int slots = rng.uniform(1, 3);
        for (int i = 0; i < slots; ++i) {
            // polynomial section components without constant term
            GradedPolynomial c = GradedPolynomial::zero(bt);
            for (int v = 0; v < bt->size(); ++v) {
                c = c + Rational(rng.uniform(-2, 2)) * GradedPolynomial::variable(bt, v);
                c = c + Rational(rng.uniform(-1, 1)) * pow(GradedPolynomial::variable(bt, v), 2);
            }
            s.slots.push_back({"e" + std::to_string(i + 1), 0, c});
        }
        DgChart z = shifted_zero_locus(s, "Z");
        Point origin{{"x", Rational(0)}, {"y", Rational(0)}};
        REQUIRE(is_classical_point(z, origin));
        CochainComplex tc = tangent_complex(z, origin);
        REQUIRE(tc.d.size() >= 1);
        for (int i = 0; i < static_cast<int>(s.slots.size()); ++i) {
            int col = 0;
            for (int b : bt->base_indices()) {
                Rational jac = evaluate_at_core(left_partial(s.slots[i].component, b), origin);
                CHECK(tc.d[0].at(i, col) == jac);
                ++col;
            }
        }
    }
}
