#include <catch2/catch_amalgamated.hpp>

#include "hilb10/apolarity.hpp"
#include "hilb10/catalog.hpp"

using namespace hilb10;

namespace {

RingPtr dual4() { return RingContext::make("y", 4, Field::rationals()); }

} // namespace

TEST_CASE("contraction on single terms") {
    RingPtr R = dual4();
    RingPtr S = dualActionRing(R);
    InverseForm y1cube = InverseForm::parse("y1^3", R);
    CHECK(contract(Polynomial::variable(S, 0), y1cube) == parsePolynomial("3*y1^2", R));

    InverseForm xyz = InverseForm::parse("y1*y2*y3", R);
    CHECK(contract(parsePolynomial("x1*x2", S), xyz) == parsePolynomial("y3", R));

    InverseForm corner = catalog::cornerCubeForm("xyz");
    CHECK(contract(Polynomial::variable(S, 3), corner) ==
          parsePolynomial("3*y4^2", R)); // a rank-1 quadric
    CHECK(contract(parsePolynomial("x1^2", S), InverseForm::parse("y2^3", R)).isZero());
}

TEST_CASE("contraction is bilinear") {
    RingPtr R = dual4();
    RingPtr S = dualActionRing(R);
    InverseForm g = catalog::cornerCubeForm("y1^2y3-y2^3");
    Polynomial f1 = parsePolynomial("x1^2-2*x2*x3", S);
    Polynomial f2 = parsePolynomial("3*x1*x4+x3^2", S);
    CHECK(contract(f1 + f2, g) == contract(f1, g) + contract(f2, g));
}

TEST_CASE("contraction guards small characteristics") {
    Field F3 = Field::primeField(3);
    RingPtr R = RingContext::make("y", 2, F3);
    RingPtr S = dualActionRing(R);
    InverseForm g = InverseForm::parse("y1^3+y2^3", R);
    CHECK_THROWS_AS(contract(Polynomial::variable(S, 0), g), FieldTooSmallError);

    Field F7 = Field::primeField(7);
    RingPtr R7 = RingContext::make("y", 2, F7);
    InverseForm g7 = InverseForm::parse("y1^3", R7);
    CHECK(contract(Polynomial::variable(dualActionRing(R7), 0), g7) ==
          parsePolynomial("3*y1^2", R7));
}

TEST_CASE("inverse forms must be nonzero and homogeneous") {
    RingPtr R = dual4();
    CHECK_THROWS_AS(InverseForm::parse("0", R), InvalidArgumentError);
    CHECK_THROWS_AS(InverseForm::parse("y1^2+y2", R), NotHomogeneousError);
}

TEST_CASE("catalecticant rank symmetry") {
    RingPtr S = dualActionRing(dual4());
    for (const std::string& which : {"xyz", "y1^2y3-y2^3", "y3(y1y3-y2^2)"}) {
        InverseForm g = catalog::cornerCubeForm(which);
        for (int j = 0; j <= 3; ++j)
            CHECK(catalecticant(g, j, S).rank == catalecticant(g, 3 - j, S).rank);
    }
}

TEST_CASE("essential variable counts") {
    RingPtr R = dual4();
    CHECK(essentialVariables(InverseForm::parse("y1^3+y2^3", R)) == 2);
    CHECK(essentialVariables(InverseForm::parse("y3^3+y4^3", R)) == 2);
    CHECK(essentialVariables(catalog::cornerCubeForm("xyz")) == 4);
}

TEST_CASE("apolar ideal of a univariate power") {
    RingPtr R1 = RingContext::make("y", 1, Field::rationals());
    Ideal perp = apolarIdeal(InverseForm::parse("y1^3", R1));
    RingPtr S1 = RingContext::make("x", 1, Field::rationals());
    CHECK(equalIdeals(perp, Ideal::fromStrings(S1, {"x1^4"})));
}

TEST_CASE("apolar ideals match the printed generators") {
    RingPtr S = dualActionRing(dual4());
    Ideal perp = apolarIdeal(catalog::cornerCubeForm("xyz"));
    Ideal expected = Ideal::fromStrings(
        S, {"x1^2", "x2^2", "x3^2", "x1*x4", "x2*x4", "x3*x4", "6*x1*x2*x3-x4^3"});
    CHECK(equalIdeals(perp, expected));

    Ideal perp2 = apolarIdeal(catalog::cornerCubeForm("y1^2y3-y2^3"));
    Ideal expected2 = Ideal::fromStrings(
        S, {"x1*x2", "x2*x3", "x3^2", "x1*x4", "x2*x4", "x3*x4", "x1^3", "x2^3+x4^3",
            "3*x1^2*x3-x4^3"});
    CHECK(equalIdeals(perp2, expected2));
}

TEST_CASE("apolar generators annihilate the form") {
    for (const std::string& which :
         {"xyz", "y3(y1y3-y2^2)", "y2(y1y3-y2^2)", "y1^2y3+y2^2y3-y2^3", "y1^2y3-y2^3"}) {
        InverseForm g = catalog::cornerCubeForm(which);
        Ideal perp = apolarIdeal(g);
        for (const auto& f : perp.generators()) CHECK(contract(f, g).isZero());
    }
}

TEST_CASE("minimal generator counts") {
    RingPtr S = dualActionRing(dual4());
    Ideal m = Ideal::fromStrings(S, {"x1", "x2", "x3", "x4"});
    MinimalGeneratorProfile p = minimalGeneratorCounts(m, 4);
    CHECK(p.count(1) == 4);
    CHECK(p.count(2) == 0);
    CHECK(p.beta == 0);

    Ideal perp = apolarIdeal(catalog::cornerCubeForm("xyz"));
    MinimalGeneratorProfile q = minimalGeneratorCounts(perp, 4);
    CHECK(q.count(2) == 6);
    CHECK(q.beta == 1);
    CHECK(minimalGeneratorCounts(apolarIdeal(catalog::cornerCubeForm("y3(y1y3-y2^2)")), 4)
              .beta == 3);
}

TEST_CASE("generator above the socle degree iff one essential variable") {
    RingPtr R = dual4();
    // one essential variable: the ideal is (x2, x3, x4, x1^4), with a minimal
    // generator one past the socle degree
    Ideal perp = apolarIdeal(InverseForm::parse("y1^3", R));
    MinimalGeneratorProfile p = minimalGeneratorCounts(perp, 5);
    CHECK(p.count(1) == 3);
    CHECK(p.count(4) == 1);
    CHECK(p.count(5) == 0);
    // several essential variables: nothing above the socle degree
    for (const std::string& which : {"xyz", "y1^2y3-y2^3"}) {
        Ideal q = apolarIdeal(catalog::cornerCubeForm(which));
        CHECK(minimalGeneratorCounts(q, 5).count(4) == 0);
    }
    CHECK(minimalGeneratorCounts(apolarIdeal(InverseForm::parse("y1^3+y2^3", R)), 5)
              .count(4) == 0);
}

TEST_CASE("rank-one contraction criterion") {
    CHECK(existsRankOneContraction(catalog::cornerCubeForm("xyz")));
    CHECK(existsRankOneContraction(catalog::ridgeForm("double-root", 0, 0, 0)));
    CHECK(!existsRankOneContraction(catalog::randomNonConeCubic(4, 20260824u, true)));
    CHECK_THROWS_AS(existsRankOneContraction(
                        InverseForm::parse("y1^3+y2^3", dual4())),
                    InvalidArgumentError);
}
