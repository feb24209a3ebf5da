#pragma once

#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "apolarity.hpp"
#include "artinian.hpp"
#include "deformations.hpp"

namespace hilb10::catalog {

/// Ground-truth values for one catalog entry, with the source citation.
struct ExpectedProfile {
    std::optional<HilbertFunction> hilbert;
    std::optional<long> h0;
    std::optional<long> beta;
    std::optional<HilbertFunction> hA2;
    long dim = 0;
    std::optional<bool> obstructed;
    std::string citation;
};

enum class EntryKind { Algebra, Form, Family };

/// A named ideal/form builder paired with its expected invariants. Family
/// entries carry the expected special fiber and optionally a decomposition
/// into parts (checked at nonzero parameter values).
struct CatalogEntry {
    std::string id;
    EntryKind kind = EntryKind::Algebra;
    std::function<Ideal()> ideal;                           // Algebra, Family
    std::function<InverseForm()> form;                      // Form
    std::function<Ideal(const RingPtr&)> apolarExpected;    // Form, optional
    std::function<Ideal()> specialFiber;                    // Family, optional
    std::function<std::vector<Ideal>(const Scalar&)> decompositionParts; // Family, optional
    ExpectedProfile expected;
};

namespace detail {

inline HilbertFunction hf(std::vector<long> v) { return HilbertFunction{std::move(v)}; }

/// Parse generators that may mention parameter names, then specialize the
/// parameters to the given scalars.
inline Ideal idealWithParams(const RingPtr& ring, const std::vector<std::string>& gens,
                             const std::map<std::string, Scalar>& params = {}) {
    if (params.empty()) return Ideal::fromStrings(ring, gens);
    std::vector<std::string> vars = ring->variables();
    for (const auto& [name, value] : params) vars.push_back(name);
    RingPtr ext = RingContext::make(vars, ring->field());
    std::map<std::string, Polynomial> assign;
    for (const auto& [name, value] : params)
        assign.emplace(name, Polynomial::constant(value, ring));
    Ideal out(ring);
    for (const auto& s : gens) out.addGenerator(substitute(parsePolynomial(s, ext), assign, ring));
    return out;
}

inline std::string xv(int i) { return "x" + std::to_string(i); }

} // namespace detail

// ---------------------------------------------------------------------------
// Hilbert function (1, n, 1, ..., 1): the "stretched" algebras.
// ---------------------------------------------------------------------------

inline Ideal stretched(int n, int d, const Field& field = Field::rationals()) {
    if (n < 1 || (n == 1 ? d < 1 : d < n + 2))
        throw InvalidArgumentError("stretched algebra needs d >= n+2 (n >= 2) or n = 1");
    RingPtr R = RingContext::make("x", static_cast<std::size_t>(n), field);
    Ideal I(R);
    if (n == 1) {
        I.addGenerator(Polynomial::variable(R, 0, d));
        return I;
    }
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            I.addGenerator(parsePolynomial(detail::xv(i) + "*" + detail::xv(j), R));
    for (int h = 2; h <= n; ++h)
        I.addGenerator(parsePolynomial(detail::xv(h) + "^2-x1^" + std::to_string(d - n), R));
    return I;
}

// ---------------------------------------------------------------------------
// Hilbert function (1, n, 2, 1, ..., 1), two isomorphism types t = 1, 2.
// ---------------------------------------------------------------------------

inline Ideal almostStretched(int t, int n, int d, const Field& field = Field::rationals()) {
    if (n < 3 || d < n + 4 || (t != 1 && t != 2))
        throw InvalidArgumentError("almost-stretched algebra needs n >= 3, d >= n+4, t in {1,2}");
    RingPtr R = RingContext::make("x", static_cast<std::size_t>(n), field);
    std::vector<std::string> gens;
    if (t == 1 && d == n + 4) {
        gens = {"x1^2*x2-x1^3", "x2^2"};
    } else if (t == 1) {
        gens = {"x1^2*x2", "x2^2-x1^" + std::to_string(d - n - 2)};
    } else {
        gens = {"x1*x2", "x2^3-x1^" + std::to_string(d - n - 1)};
    }
    std::string tail = (t == 1 && d == n + 4) ? "x1^3" : "x1^" + std::to_string(d - n - 1);
    for (int j = 3; j <= n; ++j)
        for (int i = 1; i < j; ++i) gens.push_back(detail::xv(i) + "*" + detail::xv(j));
    for (int h = 3; h <= n; ++h) gens.push_back(detail::xv(h) + "^2-" + tail);
    return Ideal::fromStrings(R, gens);
}

// ---------------------------------------------------------------------------
// Hilbert function (1, 4, 2, 2, 1), degree 10, types t = 1, 2, 3, plus the
// one-parameter smoothing families (parameter b).
// ---------------------------------------------------------------------------

namespace detail {

inline std::vector<std::string> doubleStepHead(int t) {
    switch (t) {
        case 1: return {"x1*x2", "x2^4-x1^4"};
        case 2: return {"x1^3*x2-x1^4", "x2^2"};
        case 3: return {"x1^3*x2-x1^4", "x2^2-x1^3"};
        default: throw InvalidArgumentError("type must be 1, 2 or 3");
    }
}

} // namespace detail

inline Ideal doubleStep(int t, const Field& field = Field::rationals()) {
    RingPtr R = RingContext::make("x", 4, field);
    std::vector<std::string> gens = detail::doubleStepHead(t);
    for (int j = 3; j <= 4; ++j)
        for (int i = 1; i < j; ++i) gens.push_back(detail::xv(i) + "*" + detail::xv(j));
    gens.push_back("x3^2-x1^4");
    gens.push_back("x4^2-x1^4");
    if (t == 3) gens.push_back("x1^5");
    return Ideal::fromStrings(R, gens);
}

inline Ideal doubleStepFamily(int t, const Field& field = Field::rationals()) {
    RingPtr R = RingContext::make(std::vector<std::string>{"b", "x1", "x2", "x3", "x4"}, field);
    std::vector<std::string> gens = detail::doubleStepHead(t);
    for (int j = 3; j <= 4; ++j)
        for (int i = 1; i < j; ++i) gens.push_back(detail::xv(i) + "*" + detail::xv(j));
    gens.push_back("x3^2-x1^4");
    gens.push_back("x4^2-b*x4-x1^4");
    if (t == 3) gens.push_back("x1^5");
    return Ideal::fromStrings(R, gens);
}

// ---------------------------------------------------------------------------
// Hilbert function (1, n, 3, 1), degree n+5, types t = 1..6 (parameter alpha
// enters only for t = 1).
// ---------------------------------------------------------------------------

inline Ideal cubicStep(int t, int n, const Scalar& alpha, const Field& field = Field::rationals()) {
    if (n < 4) throw InvalidArgumentError("cubic-step algebra needs n >= 4");
    RingPtr R = RingContext::make("x", static_cast<std::size_t>(n), field);
    std::vector<std::string> gens;
    std::string tail;
    switch (t) {
        case 1:
            gens = {"x1*x2+x3^2", "x1*x3", "x2^2-a*x3^2+x1^2"};
            tail = "x1^3";
            break;
        case 2:
            gens = {"x1^2", "x2^2", "x3^2+2*x1*x2"};
            tail = "x1*x2*x3";
            break;
        case 3:
            gens = {"x1^2", "x2^2", "x3^2"};
            tail = "x1*x2*x3";
            break;
        case 4:
            // the pair quadrics x1x2, x1x3, x2x3 are required for the quotient
            // to have second Hilbert value 3; cf. the t = 4 ideal of the
            // degree-10 four-variable list, which spells them out
            gens = {"x1*x2", "x1*x3", "x2*x3", "x2^3-x1^3", "x3^3-x1^3"};
            tail = "x1^3";
            break;
        case 5:
            gens = {"x1^2", "x1*x2", "x2*x3", "x2^3-x3^3", "x1*x3^2-x3^3"};
            tail = "x3^3";
            break;
        case 6:
            gens = {"x1^2", "x1*x2", "2*x1*x3+x2^2", "x3^3", "x2*x3^2"};
            tail = "x1*x3^2";
            break;
        default: throw InvalidArgumentError("type must be in 1..6");
    }
    for (int j = 4; j <= n; ++j)
        for (int i = 1; i < j; ++i) gens.push_back(detail::xv(i) + "*" + detail::xv(j));
    for (int j = 4; j <= n; ++j) gens.push_back(detail::xv(j) + "^2-" + tail);
    return detail::idealWithParams(R, gens, {{"a", alpha}});
}

inline Ideal cubicStep(int t, int n, long alpha = 0, const Field& field = Field::rationals()) {
    return cubicStep(t, n, Scalar::fromInt(alpha, field), field);
}

// ---------------------------------------------------------------------------
// Hilbert function (1, 4, 3, 1, 1), degree 10, types t = 0..6, plus the
// one-parameter smoothing families.
// ---------------------------------------------------------------------------

namespace detail {

struct CubicStep10Data {
    std::vector<std::string> head;
    std::string tail; // x4^2 - tail (family: x4^2 - b x4 - tail)
};

inline CubicStep10Data cubicStep10Data(int t) {
    switch (t) {
        case 0: return {{"x1*x2+x3^2", "x1*x3", "x2^2-x1^3"}, "x1^4"};
        case 1: return {{"x1*x2+x3^2", "x1*x3", "x2^2-x3^2-x1^3"}, "x1^4"};
        case 2: return {{"x1*x2", "x1^2-x3^3", "x2^2-x3^3", "x1*x3^2", "x2*x3^2"}, "x3^4"};
        case 3: return {{"x1*x2", "x2*x3", "x1^2-x3^3", "x1*x3^2", "x2^3-x3^4"}, "x3^4"};
        case 4: return {{"x1*x2", "x1*x3", "x2*x3", "x2^3-x1^4", "x3^3-x1^4"}, "x1^4"};
        case 5: return {{"x1*x2", "x2*x3", "x1^2", "x1*x3^2-x2^4", "x3^3-x2^4"}, "x2^4"};
        case 6: return {{"x1*x2-x3^3", "2*x1*x3+x2^2", "x1^2", "x1*x3^2", "x2*x3^2"}, "x3^4"};
        default: throw InvalidArgumentError("type must be in 0..6");
    }
}

} // namespace detail

inline Ideal cubicStep10(int t, const Field& field = Field::rationals()) {
    RingPtr R = RingContext::make("x", 4, field);
    detail::CubicStep10Data d = detail::cubicStep10Data(t);
    std::vector<std::string> gens = d.head;
    for (int i = 1; i <= 3; ++i) gens.push_back(detail::xv(i) + "*x4");
    gens.push_back("x4^2-" + d.tail);
    return Ideal::fromStrings(R, gens);
}

inline Ideal cubicStep10Family(int t, const Field& field = Field::rationals()) {
    RingPtr R = RingContext::make(std::vector<std::string>{"b", "x1", "x2", "x3", "x4"}, field);
    detail::CubicStep10Data d = detail::cubicStep10Data(t);
    std::vector<std::string> gens = d.head;
    for (int i = 1; i <= 3; ++i) gens.push_back(detail::xv(i) + "*x4");
    gens.push_back("x4^2-b*x4-" + d.tail);
    return Ideal::fromStrings(R, gens);
}

// ---------------------------------------------------------------------------
// The degree-10, Hilbert function (1,4,4,1) witness: a flat family whose
// general fiber splits off two simple points and whose special fiber is the
// graded algebra with socle x1^3.
// ---------------------------------------------------------------------------

inline Ideal gradedWitnessFamily(const Field& field = Field::rationals()) {
    RingPtr R = RingContext::make(std::vector<std::string>{"b", "x1", "x2", "x3", "x4"}, field);
    return Ideal::fromStrings(
        R, {"x3*x4", "x2*x4", "x1*x4", "x1^2+x2^2", "x1*x2+x3^2", "x1*x3",
            "x4^3-b^2*x4+b*x1^3-x1^3", "x3^3", "x2^2*x3", "x2^3"});
}

inline Ideal gradedWitness(const Field& field = Field::rationals()) {
    RingPtr R = RingContext::make("x", 4, field);
    return Ideal::fromStrings(R, {"x3*x4", "x2*x4", "x1*x4", "x1^2+x2^2", "x1*x2+x3^2", "x1*x3",
                                  "x4^3-x1^3", "x3^3", "x2^2*x3", "x2^3"});
}

/// The two pieces of the general fiber of gradedWitnessFamily (still over
/// k[b, x1..x4]; intersect after specializing b != 0).
inline Ideal gradedWitnessPart1(const Field& field = Field::rationals()) {
    RingPtr R = RingContext::make(std::vector<std::string>{"b", "x1", "x2", "x3", "x4"}, field);
    return Ideal::fromStrings(
        R, {"x4^2", "x3*x4", "x2*x4", "x1*x4", "x1*x3", "x1*x2+x3^2", "x1^2+x2^2", "x3^3",
            "x2^2*x3", "x2^3", "b*x2*x3^2-x2*x3^2-b^2*x4"});
}

inline Ideal gradedWitnessPart2(const Field& field = Field::rationals()) {
    RingPtr R = RingContext::make(std::vector<std::string>{"b", "x1", "x2", "x3", "x4"}, field);
    return Ideal::fromStrings(R, {"x1", "x2", "x3", "x4^2-b^2"});
}

// ---------------------------------------------------------------------------
// Inverse forms: canonical cubics in 4 variables and the degree-14 witness.
// ---------------------------------------------------------------------------

namespace detail {

inline InverseForm formWithParams(std::size_t nvars, const std::string& text,
                                  const std::map<std::string, Scalar>& params,
                                  const Field& field) {
    RingPtr R = RingContext::make("y", nvars, field);
    if (params.empty()) return InverseForm::parse(text, R);
    std::vector<std::string> vars = R->variables();
    for (const auto& [name, value] : params) vars.push_back(name);
    RingPtr ext = RingContext::make(vars, field);
    std::map<std::string, Polynomial> assign;
    for (const auto& [name, value] : params)
        assign.emplace(name, Polynomial::constant(value, R));
    return InverseForm::make(substitute(parsePolynomial(text, ext), assign, R));
}

} // namespace detail

/// Cubics of shape y4^3 + ghat(y1,y2,y3). `which` selects ghat.
inline InverseForm cornerCubeForm(const std::string& which, const Scalar& t,
                                  const Field& field = Field::rationals()) {
    std::map<std::string, std::string> ghat = {
        {"cone-cube", "y3^3"},
        {"cone-pair", "y2*y3^2"},
        {"cone-triple", "y2*y3^2-y2^2*y3"}, // y2 y3 (y3 - y2), a cone as well
        {"xyz", "y1*y2*y3"},
        {"y3(y1y3-y2^2)", "y1*y3^2-y2^2*y3"},
        {"y2(y1y3-y2^2)", "y1*y2*y3-y2^3"},
        {"y1^2y3+y2^2y3-y2^3", "y1^2*y3+y2^2*y3-y2^3"},
        {"y1^2y3-y2^3", "y1^2*y3-y2^3"},
        {"elliptic", "y1^2*y3-y2^3+t*y2^2*y3+y2^2*y3-t*y2*y3^2"},
    };
    auto it = ghat.find(which);
    if (it == ghat.end()) throw InvalidArgumentError("unknown cubic shape: " + which);
    return detail::formWithParams(4, "y4^3+" + it->second, {{"t", t}}, field);
}

inline InverseForm cornerCubeForm(const std::string& which,
                                  const Field& field = Field::rationals()) {
    return cornerCubeForm(which, Scalar::zero(field), field);
}

/// Cubics of shape y3^2 y4 + y3 q(y1,y2) + c(y1,y2), the three canonical
/// tails: variant "AB"-style keys with parameters b1, b2, b3.
inline InverseForm ridgeForm(const std::string& variant, const Scalar& b1, const Scalar& b2,
                             const Scalar& b3, const Field& field = Field::rationals()) {
    std::string text;
    if (variant == "two-cubes") // tail y1^3 + y2^3
        text = "y3^2*y4+b1*y2^2*y3+2*b2*y1*y2*y3+b3*y1^2*y3+y1^3+y2^3";
    else if (variant == "one-cube") // tail y2^3
        text = "y3^2*y4+b1*y2^2*y3+2*b2*y1*y2*y3+b3*y1^2*y3+y2^3";
    else if (variant == "double-root") // tail y1 y2^2, no b1 term
        text = "y3^2*y4+2*b2*y1*y2*y3+b3*y1^2*y3+y1*y2^2";
    else
        throw InvalidArgumentError("unknown ridge variant: " + variant);
    return detail::formWithParams(4, text, {{"b1", b1}, {"b2", b2}, {"b3", b3}}, field);
}

inline InverseForm ridgeForm(const std::string& variant, long b1, long b2, long b3,
                             const Field& field = Field::rationals()) {
    return ridgeForm(variant, Scalar::fromInt(b1, field), Scalar::fromInt(b2, field),
                     Scalar::fromInt(b3, field), field);
}

/// Degree-14 witness: a sum of ten cubes of linear forms in 6 variables with
/// h_A = (1,6,6,1).
inline InverseForm tenCubesForm(const Field& field = Field::rationals()) {
    RingPtr R = RingContext::make("y", 6, field);
    std::vector<std::vector<long>> lines = {
        {1, 0, 0, 0, 0, 0}, {0, 1, 0, 0, 0, 0}, {0, 0, 1, 0, 0, 0},
        {0, 0, 0, 1, 0, 0}, {0, 0, 0, 0, 1, 0}, {0, 0, 0, 0, 0, 1},
        {1, 1, 1, 1, 1, 1}, {2, 1, -2, 0, 1, -1}, {-1, -2, -2, -2, 2, -2},
        {-1, -1, 2, 1, 0, -2}};
    Polynomial g(R);
    for (const auto& c : lines) {
        Polynomial l(R);
        for (std::size_t i = 0; i < 6; ++i)
            l = l + Polynomial::variable(R, i) * Polynomial::constant(c[i], R);
        g = g + l * l * l;
    }
    return InverseForm::make(g);
}

/// Random cubic with full essential variables (and optionally beta = 0),
/// deterministic in the seed. Integer coefficients in [-5, 5].
inline InverseForm randomNonConeCubic(std::size_t nvars, unsigned seed, bool requireBetaZero,
                                      const Field& field = Field::rationals()) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> coeff(-5, 5);
    RingPtr R = RingContext::make("y", nvars, field);
    std::vector<Monomial> cubics = monomialsOfDegree(nvars, 3);
    for (;;) {
        Polynomial g(R);
        for (const auto& m : cubics) g.addTerm(m, Scalar::fromInt(coeff(rng), field));
        if (g.isZero() || !g.isHomogeneous() || g.degree() != 3) continue;
        InverseForm f = InverseForm::make(g);
        if (essentialVariables(f) != static_cast<int>(nvars)) continue;
        if (requireBetaZero) {
            Ideal gp = apolarIdeal(f);
            if (minimalGeneratorCounts(gp, 4).beta != 0) continue;
        }
        return f;
    }
}

// ---------------------------------------------------------------------------
// Registry
// ---------------------------------------------------------------------------

namespace detail {

inline Ideal expectedApolar(const RingPtr& S, const std::vector<std::string>& gens,
                            const std::map<std::string, Scalar>& params = {}) {
    return idealWithParams(S, gens, params);
}

} // namespace detail

/// The complete verification worklist: each displayed ideal/form with its
/// expected invariants and source citation.
inline std::vector<CatalogEntry> expectedRegistry() {
    using detail::hf;
    const Field Q = Field::rationals();
    std::vector<CatalogEntry> reg;

    auto algebra = [&](std::string id, std::function<Ideal()> build, ExpectedProfile exp) {
        CatalogEntry e;
        e.id = std::move(id);
        e.kind = EntryKind::Algebra;
        e.ideal = std::move(build);
        e.expected = std::move(exp);
        reg.push_back(std::move(e));
    };

    // --- stretched algebras, degree 10: Hilbert functions (1, n, 1, ..., 1)
    for (int n = 4; n <= 8; ++n) {
        std::vector<long> h{1, n};
        for (int i = 0; i < 10 - n - 1; ++i) h.push_back(1);
        algebra("A[type=stretched,n=" + std::to_string(n) + ",d=10]",
                [n] { return stretched(n, 10); },
                ExpectedProfile{hf(h), std::nullopt, std::nullopt, std::nullopt, 10, true,
                                "§3 display of A_{n,d}; Thm 5.3 (obstructed, n>=4)"});
    }

    // --- almost-stretched algebras, degree 10: (1, n, 2, 1, ..., 1)
    for (int t = 1; t <= 2; ++t)
        for (int n = 4; n <= 6; ++n) {
            std::vector<long> h{1, n, 2};
            for (int i = 0; i < 10 - n - 3; ++i) h.push_back(1);
            algebra("A[type=almost-stretched,t=" + std::to_string(t) + ",n=" + std::to_string(n) +
                        ",d=10]",
                    [t, n] { return almostStretched(t, n, 10); },
                    ExpectedProfile{hf(h), std::nullopt, std::nullopt, std::nullopt, 10, true,
                                    "§3 display of I_t for A^t_{n,2,d}; Thm 5.3"});
        }

    // --- degree 10, Hilbert function (1,4,2,2,1): three types, h0 = 45
    for (int t = 1; t <= 3; ++t)
        algebra("A[type=4,2,2,10,t=" + std::to_string(t) + "]", [t] { return doubleStep(t); },
                ExpectedProfile{hf({1, 4, 2, 2, 1}), 45, std::nullopt, std::nullopt, 10, true,
                                "§3 display of I_t for A^t_{4,2,2,10}; §5 case (5) h0=45"});

    // --- degree n+5, Hilbert function (1, n, 3, 1): n = 4 (degree 9) and
    //     n = 5 (degree 10)
    auto cubicStepId = [](int n, int t, long a) {
        std::string id = "A[type=n,3,n+5,n=" + std::to_string(n) + ",t=" + std::to_string(t);
        if (t == 1) id += ",alpha=" + std::to_string(a);
        return id + "]";
    };
    for (int n : {4, 5}) {
        std::vector<long> h{1, n, 3, 1};
        for (int t = 1; t <= 6; ++t) {
            std::vector<long> alphas = (t == 1) ? std::vector<long>{0, 1, 2}
                                                : std::vector<long>{0};
            for (long a : alphas) {
                ExpectedProfile exp;
                exp.hilbert = hf(h);
                exp.dim = n + 5;
                if (n == 4) {
                    exp.obstructed = (t >= 4);
                    exp.citation = "§3 display of A^{t,α}_{n,3,n+5}; Thm 5.3 (n=4: obstructed iff "
                                   "t=4,5,6)";
                } else {
                    exp.h0 = (t <= 3) ? 57 : 64;
                    exp.obstructed = true;
                    exp.citation = "§3 display of A^{t,α}_{n,3,n+5}; §5 case (3): h0=57 (t=1,2,3), "
                                   "64 (t=4,5,6)";
                }
                algebra(cubicStepId(n, t, a), [t, n, a] { return cubicStep(t, n, a); }, exp);
            }
        }
    }

    // --- degree 10, Hilbert function (1,4,3,1,1): types t = 0..6
    for (int t = 0; t <= 6; ++t) {
        ExpectedProfile exp;
        exp.hilbert = hf({1, 4, 3, 1, 1});
        exp.dim = 10;
        exp.h0 = (t <= 1) ? 40 : 45;
        exp.obstructed = (t >= 2);
        exp.citation = "§3 display of A^t_{4,3,10}; §5 case (4): h0=40 (t=0,1), 45 (t=2..6)";
        algebra("A[type=4,3,10,t=" + std::to_string(t) + "]", [t] { return cubicStep10(t); }, exp);
    }

    // --- graded (1,4,4,1) witness with socle x1^3: special fiber and family
    algebra("prop4.3/I", [] { return gradedWitness(); },
            ExpectedProfile{hf({1, 4, 4, 1}), 40, std::nullopt, std::nullopt, 10, false,
                            "Prop 4.3: h_A=(1,4,4,1), dim S/I^2=50, h0=40, unobstructed"});
    {
        CatalogEntry e;
        e.id = "prop4.3/J";
        e.kind = EntryKind::Family;
        e.ideal = [] { return gradedWitnessFamily(); };
        e.specialFiber = [] { return gradedWitness(); };
        e.decompositionParts = [](const Scalar& b) {
            Ideal p1 = fiber(gradedWitnessPart1(), b);
            Ideal p2 = fiber(gradedWitnessPart2(), b);
            return std::vector<Ideal>{p1, p2};
        };
        e.expected.dim = 10;
        e.expected.citation = "Prop 4.3: J = J1 ∩ J2 for b != 0; special fiber I; fibers of "
                              "degree 10";
        reg.push_back(std::move(e));
    }

    // --- smoothing families for the (1,4,2,2,1) and (1,4,3,1,1) types
    for (int t = 1; t <= 3; ++t) {
        CatalogEntry e;
        e.id = "prop3.3/J_" + std::to_string(t);
        e.kind = EntryKind::Family;
        e.ideal = [t] { return doubleStepFamily(t); };
        e.specialFiber = [t] { return doubleStep(t); };
        e.expected.dim = 10;
        e.expected.citation = "Prop 3.3: family J_t, special fiber A^t_{4,2,2,10}, flat of "
                              "degree 10";
        reg.push_back(std::move(e));
    }
    for (int t = 0; t <= 6; ++t) {
        CatalogEntry e;
        e.id = "prop3.5/J_" + std::to_string(t);
        e.kind = EntryKind::Family;
        e.ideal = [t] { return cubicStep10Family(t); };
        e.specialFiber = [t] { return cubicStep10(t); };
        e.expected.dim = 10;
        e.expected.citation = "Prop 3.5: family J_t, special fiber A^t_{4,3,10}, flat of "
                              "degree 10";
        reg.push_back(std::move(e));
    }

    // --- canonical cubics in 4 variables (graded (1,4,4,1) quotients)
    auto formEntry = [&](std::string id, std::function<InverseForm()> build, long beta,
                         std::function<Ideal(const RingPtr&)> apolar, std::string citation) {
        CatalogEntry e;
        e.id = std::move(id);
        e.kind = EntryKind::Form;
        e.form = std::move(build);
        e.apolarExpected = std::move(apolar);
        e.expected.hilbert = hf({1, 4, 4, 1});
        e.expected.dim = 10;
        e.expected.beta = beta;
        e.expected.hA2 = (beta == 3) ? hf({1, 4, 10, 20, 16, 4}) : hf({1, 4, 10, 20, 14, 1});
        e.expected.h0 = (beta == 3) ? 45 : 40;
        e.expected.obstructed = (beta == 3);
        e.expected.citation = std::move(citation);
        reg.push_back(std::move(e));
    };

    formEntry("prop5.9/y4cube+xyz", [] { return cornerCubeForm("xyz"); }, 1,
              [](const RingPtr& S) {
                  return detail::expectedApolar(S, {"x1^2", "x2^2", "x3^2", "x1*x4", "x2*x4",
                                                    "x3*x4", "6*x1*x2*x3-x4^3"});
              },
              "Prop 5.9: g=y4^3+y1y2y3, beta=1");
    formEntry("prop5.9/y4cube+y3(y1y3-y2^2)", [] { return cornerCubeForm("y3(y1y3-y2^2)"); }, 3,
              [](const RingPtr& S) {
                  return detail::expectedApolar(
                      S, {"x1^2", "x1*x2", "x2^2+x1*x3", "x1*x4", "x2*x4", "x3*x4",
                          "3*x1*x3^2-x4^3", "x2*x3^2", "x3^3"});
              },
              "Prop 5.9: g=y4^3+y3(y1y3-y2^2), beta=3");
    formEntry("prop5.9/y4cube+y2(y1y3-y2^2)", [] { return cornerCubeForm("y2(y1y3-y2^2)"); }, 1,
              [](const RingPtr& S) {
                  return detail::expectedApolar(S, {"x1^2", "x2^2+6*x1*x3", "x3^2", "x1*x4",
                                                    "x2*x4", "x3*x4", "6*x1*x2*x3-x4^3"});
              },
              "Prop 5.9: g=y4^3+y2(y1y3-y2^2), beta=1");
    formEntry("prop5.9/y4cube+y1^2y3+y2^2y3-y2^3",
              [] { return cornerCubeForm("y1^2y3+y2^2y3-y2^3"); }, 1,
              [](const RingPtr& S) {
                  return detail::expectedApolar(S, {"x1^2-x2^2-3*x2*x3", "x1*x2", "x3^2", "x1*x4",
                                                    "x2*x4", "x3*x4", "3*x2^2*x3-x4^3"});
              },
              "Prop 5.9: g=y4^3+y1^2y3+y2^2y3-y2^3, beta=1");
    formEntry("prop5.9/y4cube+y1^2y3-y2^3", [] { return cornerCubeForm("y1^2y3-y2^3"); }, 3,
              [](const RingPtr& S) {
                  return detail::expectedApolar(
                      S, {"x1*x2", "x2*x3", "x3^2", "x1*x4", "x2*x4", "x3*x4", "x1^3",
                          "x2^3+x4^3", "3*x1^2*x3-x4^3"});
              },
              "Prop 5.9: g=y4^3+y1^2y3-y2^3, beta=3");

    auto ellipticApolar = [](const RingPtr& S, const Scalar& t) {
        return detail::expectedApolar(
            S,
            {"x1*x2", "x1*x4", "x2*x4", "x3*x4", "t^2*x1^2+t*x1^2-t*x2^2+3*x3^2",
             "t^2*x1^2-t*x1^2+x1^2-t*x2^2-x2^2-3*x2*x3", "x1^3", "x1*x3^2", "x3^3",
             "x2^3+x4^3", "t*x1^2*x3+x2*x3^2", "t*x1^2*x3+x1^2*x3-x2^2*x3", "3*x1^2*x3+x2^3"},
            {{"t", t}});
    };
    formEntry("prop5.9/elliptic,t=2",
              [Q] { return cornerCubeForm("elliptic", Scalar::fromInt(2, Q)); }, 1,
              [ellipticApolar, Q](const RingPtr& S) {
                  return ellipticApolar(S, Scalar::fromInt(2, Q));
              },
              "Prop 5.9: elliptic pencil, t^2-t+1 != 0, beta=1");
    {
        const Field F7 = Field::primeField(7);
        formEntry("prop5.9/elliptic,t=3,fp=7",
                  [F7] { return cornerCubeForm("elliptic", Scalar::fromInt(3, F7), F7); }, 3,
                  [ellipticApolar, F7](const RingPtr& S) {
                      return ellipticApolar(S, Scalar::fromInt(3, F7));
                  },
                  "Prop 5.9: elliptic pencil over F_7 with t=3 (t^2-t+1=0), beta=3");
    }

    auto ridgeApolar = [](const std::string& variant, const RingPtr& S, long b1, long b2,
                          long b3) {
        const Field f = S->field();
        std::map<std::string, Scalar> p{{"b1", Scalar::fromInt(b1, f)},
                                        {"b2", Scalar::fromInt(b2, f)},
                                        {"b3", Scalar::fromInt(b3, f)}};
        if (variant == "two-cubes")
            return detail::expectedApolar(
                S,
                {"x4^2", "x2*x4", "x1*x4", "x1*x2-b2*x3*x4",
                 "3*x2*x3-b2*x1^2-b1*x2^2+b1^2*x3*x4+b2*b3*x3*x4",
                 "3*x1*x3-b3*x1^2-b2*x2^2+b1*b2*x3*x4+b3^2*x3*x4", "x1^3-3*x3^2*x4",
                 "x2^3-3*x3^2*x4", "x3^3"},
                p);
        if (variant == "one-cube")
            return detail::expectedApolar(
                S,
                {"x4^2", "x2*x4", "x1*x4", "x1^2-b3*x3*x4", "x1*x2-b2*x3*x4",
                 "3*b2*x1*x3-3*b3*x2*x3+b1*b3*x2^2-b2^2*x2^2-b1^2*b3*x3*x4+b1*b2^2*x3*x4",
                 "x3^3", "x1*x3^2", "x2*x3^2", "x2^3-3*x3^2*x4", "x2^2*x3-b1*x3^2*x4"},
                p);
        return detail::expectedApolar(
            S,
            {"x4^2", "x2*x4", "x1*x4", "x1^2-b3*x3*x4", "x2*x3-b2*x2^2",
             "x1*x3-b2*x1*x2-b3*x2^2+b2^2*x3*x4", "x3^3", "x2^3", "x1*x3^2",
             "x1*x2^2-x3^2*x4"},
            p);
    };

    auto ridgeEntry = [&](const std::string& variant, long b1, long b2, long b3, long beta,
                          std::string citation) {
        formEntry("prop5.9/" + variant + ",b1=" + std::to_string(b1) + ",b2=" +
                      std::to_string(b2) + ",b3=" + std::to_string(b3),
                  [variant, b1, b2, b3] { return ridgeForm(variant, b1, b2, b3); }, beta,
                  [ridgeApolar, variant, b1, b2, b3](const RingPtr& S) {
                      return ridgeApolar(variant, S, b1, b2, b3);
                  },
                  std::move(citation));
    };
    ridgeEntry("two-cubes", 1, 1, 1, 1, "Prop 5.9 second case, form y1^3+y2^3 tail: b2 != 0 "
                                        "gives beta=1");
    ridgeEntry("two-cubes", 1, 0, 1, 3, "Prop 5.9 second case, form y1^3+y2^3 tail: b2 = 0 "
                                        "gives beta=3");
    ridgeEntry("one-cube", 1, 1, 0, 3, "Prop 5.9 second case, form y2^3 tail: beta=3 (b2 != 0)");
    ridgeEntry("one-cube", 0, 0, 1, 3, "Prop 5.9 second case, form y2^3 tail: beta=3 (b3 != 0)");
    ridgeEntry("double-root", 0, 1, 1, 1, "Prop 5.9 second case, form y1y2^2 tail: b3 != 0 "
                                          "gives beta=1");
    ridgeEntry("double-root", 0, 1, 0, 3, "Prop 5.9 second case, form y1y2^2 tail: b3 = 0 "
                                          "gives beta=3");

    // --- random non-cone cubics: beta = 0 generic case, 4 variables
    for (unsigned s = 0; s < 5; ++s) {
        CatalogEntry e;
        e.id = "random/beta0,sample=" + std::to_string(s);
        e.kind = EntryKind::Form;
        e.form = [s] { return randomNonConeCubic(4, 20260824u + s, true); };
        e.expected.hilbert = hf({1, 4, 4, 1});
        e.expected.dim = 10;
        e.expected.beta = 0;
        e.expected.hA2 = hf({1, 4, 10, 20, 14, 1});
        e.expected.h0 = 40;
        e.expected.obstructed = false;
        e.expected.citation = "Prop 5.7: beta=0 implies h_{A^(2)}=(1,4,10,20,14,1)";
        reg.push_back(std::move(e));
    }

    // --- random non-cone cubics in 5 variables: h_A = (1,5,5,1), h0 = 60
    for (unsigned s = 0; s < 3; ++s) {
        CatalogEntry e;
        e.id = "random/1551,sample=" + std::to_string(s);
        e.kind = EntryKind::Form;
        e.form = [s] { return randomNonConeCubic(5, 20260824u + 100 + s, false); };
        e.expected.hilbert = hf({1, 5, 5, 1});
        e.expected.dim = 12;
        e.expected.h0 = 60;
        e.expected.citation = "§4 remark after Question: (1,5,5,1) cubics give h0=60";
        reg.push_back(std::move(e));
    }

    // --- degree-14 witness
    {
        CatalogEntry e;
        e.id = "deg14";
        e.kind = EntryKind::Form;
        e.form = [] { return tenCubesForm(); };
        e.expected.hilbert = hf({1, 6, 6, 1});
        e.expected.dim = 14;
        e.expected.h0 = 76;
        e.expected.citation = "§4: degree-14 example, h_A=(1,6,6,1), h0=76";
        reg.push_back(std::move(e));
    }

    return reg;
}

/// All Hilbert-function shapes of degree-10, emdim >= 4 Gorenstein algebras.
inline std::vector<HilbertFunction> degree10Shapes() {
    using detail::hf;
    return {hf({1, 4, 1, 1, 1, 1, 1}), hf({1, 5, 1, 1, 1, 1}), hf({1, 6, 1, 1, 1}),
            hf({1, 7, 1, 1}),          hf({1, 8, 1}),          hf({1, 4, 2, 1, 1, 1}),
            hf({1, 4, 2, 2, 1}),       hf({1, 5, 2, 1, 1}),    hf({1, 6, 2, 1}),
            hf({1, 4, 3, 1, 1}),       hf({1, 5, 3, 1}),       hf({1, 4, 4, 1})};
}

} // namespace hilb10::catalog
