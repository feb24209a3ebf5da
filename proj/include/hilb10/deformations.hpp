#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "artinian.hpp"
#include "ideal.hpp"

namespace hilb10 {

/// Tangent-space data of a zero-dimensional subscheme: h0 = deg X^(2) - deg X,
/// obstructed when h0 exceeds the smooth-point dimension d*N.
struct TangentReport {
    long dimA = 0;   // dim_k S/I
    long dimA2 = 0;  // dim_k S/I^2
    long h0 = 0;     // dimA2 - dimA
    long ambientN = 0;
    bool obstructed = false;
};

/// Fiber dimensions of a one-parameter family at sampled parameter values.
struct FamilyFiberReport {
    std::vector<Scalar> parameterValues;
    std::vector<long> fiberDims;
    bool specialMatchesCatalog = false;
    std::optional<bool> decompositionVerified;

    bool allFibersEqual() const {
        for (long d : fiberDims)
            if (d != fiberDims.front()) return false;
        return !fiberDims.empty();
    }
};

namespace detail {

/// dim_k S/I^2. Homogeneous inputs go through the graded Hilbert function,
/// which stays in small per-degree echelons; otherwise fall back to a
/// Groebner basis of I^2.
inline long squareQuotientDimension(const Ideal& I) {
    Ideal sq = idealSquare(I);
    bool homogeneous = true;
    for (const auto& g : I.generators())
        if (!g.isHomogeneous()) homogeneous = false;
    if (homogeneous) return gradedHilbertFunction(sq).sum();
    return quotientDimension(sq);
}

} // namespace detail

/// h0 via deg X^(2) - deg X. ambientN < 0 means the ring's variable count.
inline TangentReport tangentDimension(const Ideal& I, long ambientN = -1) {
    TangentReport r;
    r.ambientN = ambientN < 0 ? static_cast<long>(I.ring()->varCount()) : ambientN;
    if (r.ambientN < static_cast<long>(I.ring()->varCount()))
        throw InvalidArgumentError("ambient dimension below the number of variables");
    r.dimA = quotientDimension(I);
    r.dimA2 = detail::squareQuotientDimension(I);
    r.h0 = r.dimA2 - r.dimA;
    r.obstructed = r.h0 > r.dimA * r.ambientN;
    return r;
}

/// Same subscheme in a ring with extra unused variables, added as generators.
/// h0 grows by deg(X) per added variable, so h0 - d*N is unchanged.
inline Ideal embedInHigherAmbient(const Ideal& I, int extraVariables) {
    if (extraVariables < 1) throw InvalidArgumentError("need at least one extra variable");
    const RingPtr& ring = I.ring();
    std::vector<std::string> vars = ring->variables();
    for (int i = 0; i < extraVariables; ++i) {
        std::string name = "w" + std::to_string(i + 1);
        while (std::find(vars.begin(), vars.end(), name) != vars.end()) name += "_";
        vars.push_back(name);
    }
    RingPtr ext = RingContext::make(vars, ring->field());
    Ideal out(ext);
    for (const auto& g : I.generators()) out.addGenerator(mapToRing(g, ext));
    for (std::size_t i = ring->varCount(); i < ext->varCount(); ++i)
        out.addGenerator(Polynomial::variable(ext, i));
    return out;
}

/// Check h0 additivity over a disjoint union: h0(I1 ∩ I2) = h0(I1) + h0(I2).
inline bool additivityCheck(const Ideal& I1, const Ideal& I2, long ambientN = -1) {
    requireSameRing(I1.ring(), I2.ring());
    Ideal sum = idealSum(I1, I2);
    if (!sum.groebner().containsUnit())
        throw NotDisjointError("supports are not disjoint: I1 + I2 != (1)");
    TangentReport whole = tangentDimension(intersect(I1, I2), ambientN);
    TangentReport a = tangentDimension(I1, ambientN);
    TangentReport b = tangentDimension(I2, ambientN);
    return whole.h0 == a.h0 + b.h0;
}

/// Specialize the parameter variable b and drop it from the ring. A family
/// without a variable named "b" is returned unchanged.
inline Ideal fiber(const Ideal& family, const Scalar& bValue) {
    const RingPtr& ring = family.ring();
    auto bIdx = ring->indexOf("b");
    if (!bIdx) return family;
    if (ring->varCount() < 2)
        throw InvalidArgumentError("family ring has no variables besides the parameter");
    std::vector<std::string> rest;
    for (std::size_t i = 0; i < ring->varCount(); ++i)
        if (i != *bIdx) rest.push_back(ring->variable(i));
    RingPtr target = RingContext::make(rest, ring->field());
    std::map<std::string, Polynomial> assign{
        {"b", Polynomial::constant(Scalar::fromRational(bValue.value(), target->field()), target)}};
    Ideal out(target);
    for (const auto& g : family.generators()) out.addGenerator(substitute(g, assign, target));
    return out;
}

inline Ideal fiber(const Ideal& family, long bValue) {
    return fiber(family, Scalar::fromInt(bValue, family.ring()->field()));
}

inline std::vector<Scalar> defaultFlatnessSamples(const Field& field) {
    return {Scalar::zero(field), Scalar::fromInt(1, field), Scalar::fromInt(2, field),
            Scalar::fromFraction(1, 2, field)};
}

/// Equal fiber dimension at every sampled parameter value. A certificate, not
/// a proof: flatness of a finite family is checked pointwise on the samples.
inline FamilyFiberReport flatnessCertificate(const Ideal& family,
                                             const std::vector<Scalar>& samples,
                                             const Ideal* expectedSpecialFiber = nullptr) {
    if (samples.size() < 3) throw InvalidArgumentError("need at least three parameter samples");
    bool hasZero = false;
    for (const auto& s : samples) hasZero = hasZero || s.isZero();
    if (!hasZero) throw InvalidArgumentError("samples must include 0");
    FamilyFiberReport report;
    report.parameterValues = samples;
    for (const auto& s : samples) {
        Ideal fib = fiber(family, s);
        report.fiberDims.push_back(quotientDimension(fib));
        if (s.isZero() && expectedSpecialFiber)
            report.specialMatchesCatalog = equalIdeals(fib, *expectedSpecialFiber);
    }
    return report;
}

inline FamilyFiberReport flatnessCertificate(const Ideal& family,
                                             const Ideal* expectedSpecialFiber = nullptr) {
    return flatnessCertificate(family, defaultFlatnessSamples(family.ring()->field()),
                               expectedSpecialFiber);
}

/// whole = intersection of the parts?
inline bool verifyDecomposition(const Ideal& whole, const std::vector<Ideal>& parts) {
    if (parts.empty()) throw InvalidArgumentError("decomposition needs at least one part");
    Ideal meet = parts.front();
    for (std::size_t i = 1; i < parts.size(); ++i) meet = intersect(meet, parts[i]);
    return equalIdeals(whole, meet);
}

} // namespace hilb10
