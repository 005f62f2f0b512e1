#include "dgcalc/derivation.hpp"

#include "support.hpp"

#include <doctest.h>

using namespace dgcalc;
using namespace dgtest;

namespace {

Derivation make_derivation(const VarTablePtr& t, int degree,
                           const std::vector<std::pair<std::string, GradedPolynomial>>& vals) {
    std::vector<GradedPolynomial> values(t->size(), GradedPolynomial::zero(t));
    for (const auto& [name, v] : vals) values[*t->find(name)] = v;
    return Derivation(t, degree, std::move(values));
}

}  // namespace

TEST_CASE("leibniz extension on generators") {
    auto t = make_table({{"xi", -1}, {"x", 0}, {"y", 0}});
    auto x = GradedPolynomial::variable(t, *t->find("x"));
    auto y = GradedPolynomial::variable(t, *t->find("y"));
    auto xi = GradedPolynomial::variable(t, *t->find("xi"));
    Derivation X = make_derivation(t, 1, {{"xi", x}});
    CHECK(X.apply(y * xi) == x * y);
    CHECK(X.apply(GradedPolynomial::constant(t, Rational(7))).is_zero());
}

TEST_CASE("odd derivation sign on the second factor") {
    auto t = make_table({{"xi1", -1}, {"xi2", -1}, {"x", 0}, {"y", 0}});
    auto x = GradedPolynomial::variable(t, *t->find("x"));
    auto y = GradedPolynomial::variable(t, *t->find("y"));
    auto xi1 = GradedPolynomial::variable(t, *t->find("xi1"));
    auto xi2 = GradedPolynomial::variable(t, *t->find("xi2"));
    Derivation X = make_derivation(t, 1, {{"xi1", x}, {"xi2", y}});
    CHECK(X.apply(xi1 * xi2) == x * xi2 - y * xi1);
}

TEST_CASE("commutator examples") {
    auto t = make_table({{"xi", -1}, {"x", 0}});
    auto x = GradedPolynomial::variable(t, *t->find("x"));
    Derivation D = make_derivation(t, 1, {{"xi", pow(x, 2)}});
    Derivation E = euler_field(t);
    CHECK(commutator(E, D) == D);
    CHECK(lie_derivative(E, D) == D);

    // even self-commutator vanishes
    Derivation even = make_derivation(t, 0, {{"x", pow(x, 2)}});
    Derivation zero0 = Derivation::zero(t, 0);
    CHECK(commutator(even, even) == zero0);

    // odd X with X(xi) = x: X(X(xi)) = X(x) = 0
    Derivation X = make_derivation(t, 1, {{"xi", x}});
    CHECK(commutator(X, X) == Derivation::zero(t, 2));

    // L_D(d/dxi) = 0 for D = x d/dxi
    Derivation ddxi = make_derivation(t, 1, {{"xi", GradedPolynomial::constant(t, Rational(1))}});
    CHECK(lie_derivative(X, ddxi) == Derivation::zero(t, 2));
    CHECK(lie_derivative(X, X) == Derivation::zero(t, 2));
}

TEST_CASE("euler field measures degree") {
    auto t = make_table({{"xi1", -1}, {"xi2", -1}, {"x", 0}});
    Derivation E = euler_field(t);
    auto xi1 = GradedPolynomial::variable(t, 0);
    auto xi2 = GradedPolynomial::variable(t, 1);
    auto x = GradedPolynomial::variable(t, 2);
    CHECK(E.apply(xi1) == -xi1);
    CHECK(E.apply(x).is_zero());
    CHECK(E.apply(xi1 * xi2) == Rational(-2) * (xi1 * xi2));

    Rng rng(13);
    for (int i = 0; i < 60; ++i) {
        int deg = -(i % 3);
        GradedPolynomial p = random_homogeneous(rng, t, deg, 3);
        CHECK(E.apply(p) == Rational(deg) * p);
    }
}

TEST_CASE("square-zero certification") {
    auto t1 = make_table({{"xi", -1}, {"x", 0}});
    Derivation D1 = make_derivation(t1, 1, {{"xi", GradedPolynomial::variable(t1, 1)}});
    CHECK(is_cohomological(D1).ok);

    auto t2 = make_table({{"xi1", -2}, {"xi2", -1}});
    Derivation D2 = make_derivation(t2, 1, {{"xi1", GradedPolynomial::variable(t2, 1)}});
    CHECK(is_cohomological(D2).ok);

    auto t3 = make_table({{"eta", -2}, {"xi1", -1}, {"x", 0}});
    Derivation D3 = make_derivation(
        t3, 1, {{"eta", GradedPolynomial::variable(t3, 1)}, {"xi1", GradedPolynomial::variable(t3, 2)}});
    CohomologicalCheck c = is_cohomological(D3);
    CHECK_FALSE(c.ok);
    CHECK(*c.generator == "eta");
    CHECK(*c.residue == GradedPolynomial::variable(t3, 2));

    Derivation not_deg1 = Derivation::zero(t3, 0);
    CHECK_FALSE(is_cohomological(not_deg1).ok);
}

TEST_CASE("graded jacobi on random triples") {
    auto t = make_table({{"e", -2}, {"f", -1}, {"x", 0}});
    Rng rng(31);
    auto random_derivation = [&](int degree) {
        std::vector<GradedPolynomial> values;
        for (int v = 0; v < t->size(); ++v)
            values.push_back(random_homogeneous(rng, t, t->var(v).degree + degree, 2));
        return Derivation(t, degree, std::move(values));
    };
    for (int trial = 0; trial < 40; ++trial) {
        Derivation X = random_derivation(trial % 3 - 1);
        Derivation Y = random_derivation((trial + 1) % 3 - 1);
        Derivation Z = random_derivation((trial + 2) % 3 - 1);
        bool flip = X.odd() && Y.odd();
        Derivation lhs = commutator(X, commutator(Y, Z));
        Derivation mid = commutator(commutator(X, Y), Z);
        Derivation rhs_tail = commutator(Y, commutator(X, Z));
        for (int v = 0; v < t->size(); ++v) {
            GradedPolynomial expect = mid.value(v) + (flip ? -rhs_tail.value(v) : rhs_tail.value(v));
            CHECK(lhs.value(v) == expect);
        }
    }
}

TEST_CASE("square-zero on generators extends to all polynomials") {
    auto t = make_table({{"eta", -2}, {"xi", -1}, {"x", 0}});
    auto x = GradedPolynomial::variable(t, *t->find("x"));
    auto xi = GradedPolynomial::variable(t, *t->find("xi"));
    // D(eta) = x*xi, D(xi) = 0
    std::vector<GradedPolynomial> values(t->size(), GradedPolynomial::zero(t));
    values[*t->find("eta")] = x * xi;
    Derivation D2(t, 1, std::move(values));
    REQUIRE(is_cohomological(D2).ok);
    Rng rng(17);
    for (int i = 0; i < 50; ++i) {
        GradedPolynomial p = random_poly(rng, t, 4);
        CHECK(D2.apply(D2.apply(p)).is_zero());
    }
}

TEST_CASE("cohomological derivations raise degree by one") {
    auto t = make_table({{"eta", -2}, {"xi", -1}, {"x", 0}});
    std::vector<GradedPolynomial> values(t->size(), GradedPolynomial::zero(t));
    values[*t->find("eta")] = GradedPolynomial::variable(t, *t->find("x")) *
                              GradedPolynomial::variable(t, *t->find("xi"));
    Derivation D(t, 1, std::move(values));
    REQUIRE(is_cohomological(D).ok);
    Rng rng(53);
    for (int i = 0; i < 60; ++i) {
        int deg = -(i % 4);
        GradedPolynomial p = random_homogeneous(rng, t, deg, 3);
        GradedPolynomial dp = D.apply(p);
        if (dp.is_zero()) continue;
        Homogeneity h = homogeneous_degree(dp);
        CHECK(h.kind == Homogeneity::kHomogeneous);
        CHECK(h.degree == deg + 1);
    }
}
