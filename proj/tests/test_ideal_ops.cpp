#include <catch2/catch_amalgamated.hpp>

#include "hilb10/artinian.hpp"
#include "hilb10/catalog.hpp"
#include "hilb10/ideal.hpp"

using namespace hilb10;

namespace {

RingPtr q2() { return RingContext::make("x", 2, Field::rationals()); }

} // namespace

TEST_CASE("sum, product and square") {
    RingPtr R = q2();
    Ideal x1 = Ideal::fromStrings(R, {"x1"});
    Ideal x2 = Ideal::fromStrings(R, {"x2"});
    CHECK(equalIdeals(idealProduct(x1, x2), Ideal::fromStrings(R, {"x1*x2"})));
    CHECK(equalIdeals(idealSum(x1, x2), Ideal::fromStrings(R, {"x1", "x2"})));

    RingPtr R4 = RingContext::make("x", 4, Field::rationals());
    Ideal m = Ideal::fromStrings(R4, {"x1", "x2", "x3", "x4"});
    Ideal m2 = idealSquare(m);
    CHECK(m2.groebner().elements.size() == 10); // all quadratic monomials
    CHECK(gradedHilbertFunction(m2) == HilbertFunction{{1, 4}});
}

TEST_CASE("elimination") {
    RingPtr R = RingContext::make(std::vector<std::string>{"t", "x1", "x2"}, Field::rationals());
    Ideal tagged = Ideal::fromStrings(R, {"t*x1", "x2-t*x2"});
    Ideal elim = eliminate(tagged, 1);
    RingPtr R2 = q2();
    CHECK(equalIdeals(elim, Ideal::fromStrings(R2, {"x1*x2"})));

    RingPtr G = RingContext::make(std::vector<std::string>{"x1", "x2"}, Field::rationals());
    Ideal graph = Ideal::fromStrings(G, {"x1-x2^2"});
    CHECK(eliminate(graph, 1).isZeroIdeal());

    CHECK_THROWS_AS(eliminate(graph, 0), InvalidArgumentError);
    CHECK_THROWS_AS(eliminate(graph, 2), InvalidArgumentError);
}

TEST_CASE("intersection basics") {
    RingPtr R = q2();
    Ideal x1 = Ideal::fromStrings(R, {"x1"});
    CHECK(equalIdeals(intersect(x1, x1), x1));

    // two reduced points (0,0) and (0,1): oracle checks vanishing + degree 2
    Ideal origin = Ideal::fromStrings(R, {"x1", "x2"});
    Ideal shifted = Ideal::fromStrings(R, {"x1", "x2-1"});
    Ideal both = intersect(origin, shifted);
    CHECK(equalIdeals(both, Ideal::fromStrings(R, {"x1", "x2^2-x2"})));
    for (const auto& g : both.generators()) {
        std::map<std::string, Polynomial> at00{{"x1", Polynomial::zero(R)},
                                               {"x2", Polynomial::zero(R)}};
        std::map<std::string, Polynomial> at01{{"x1", Polynomial::zero(R)},
                                               {"x2", Polynomial::constant(1, R)}};
        CHECK(substitute(g, at00).isZero());
        CHECK(substitute(g, at01).isZero());
    }
    CHECK(quotientDimension(both) == 2);
}

TEST_CASE("intersection containments and product bound") {
    Ideal I = catalog::doubleStep(2);
    Ideal J = catalog::cubicStep10(1);
    Ideal Jmapped(I.ring());
    for (const auto& g : J.generators()) Jmapped.addGenerator(mapToRing(g, I.ring()));
    Ideal meet = intersect(I, Jmapped);
    for (const auto& g : meet.generators()) {
        CHECK(idealContains(I, g));
        CHECK(idealContains(Jmapped, g));
    }
    Ideal prod = idealProduct(I, Jmapped);
    for (const auto& g : prod.generators()) CHECK(idealContains(meet, g));
}

TEST_CASE("colon ideals") {
    RingPtr R = q2();
    CHECK(equalIdeals(idealQuotient(Ideal::fromStrings(R, {"x1^2"}),
                                    Ideal::fromStrings(R, {"x1"})),
                      Ideal::fromStrings(R, {"x1"})));
    CHECK(equalIdeals(idealQuotient(Ideal::fromStrings(R, {"x1*x2"}),
                                    Ideal::fromStrings(R, {"x2"})),
                      Ideal::fromStrings(R, {"x1"})));
    CHECK_THROWS_AS(idealQuotient(Ideal::fromStrings(R, {"x1"}), Ideal(R)),
                    InvalidArgumentError);
}

TEST_CASE("quotient-product containment on small instances") {
    RingPtr R = q2();
    std::vector<std::pair<Ideal, Ideal>> cases = {
        {Ideal::fromStrings(R, {"x1^2", "x1*x2"}), Ideal::fromStrings(R, {"x1"})},
        {Ideal::fromStrings(R, {"x1^3-x2^2"}), Ideal::fromStrings(R, {"x1", "x2"})},
        {Ideal::fromStrings(R, {"x1*x2", "x2^3"}), Ideal::fromStrings(R, {"x2^2"})},
    };
    for (const auto& [I, J] : cases) {
        Ideal q = idealQuotient(I, J);
        Ideal prod = idealProduct(q, J);
        for (const auto& g : prod.generators()) CHECK(idealContains(I, g));
    }
}

TEST_CASE("saturation") {
    RingPtr R = q2();
    // (x1^2 * x2) : x2^inf = (x1^2)
    Ideal I = Ideal::fromStrings(R, {"x1^2*x2"});
    Ideal J = Ideal::fromStrings(R, {"x2"});
    CHECK(equalIdeals(saturate(I, J), Ideal::fromStrings(R, {"x1^2"})));
}

TEST_CASE("ideal equality") {
    RingPtr R = q2();
    CHECK(equalIdeals(Ideal::fromStrings(R, {"x1", "x2"}),
                      Ideal::fromStrings(R, {"x2", "x1+x2"})));
    CHECK(!equalIdeals(Ideal::fromStrings(R, {"x1^2"}), Ideal::fromStrings(R, {"x1"})));
}

TEST_CASE("exact division") {
    RingPtr R = q2();
    Polynomial f = parsePolynomial("x1^2*x2-x1*x2^2", R);
    Polynomial g = parsePolynomial("x1-x2", R);
    CHECK(divideExact(f, g) == parsePolynomial("x1*x2", R));
    CHECK_THROWS_AS(divideExact(parsePolynomial("x1+1", R), parsePolynomial("x2", R)),
                    InvalidArgumentError);
}
