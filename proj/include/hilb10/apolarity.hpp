#pragma once

#include <map>
#include <string>
#include <vector>

#include "artinian.hpp"
#include "ideal.hpp"
#include "linalg.hpp"

namespace hilb10 {

/// Homogeneous element of the dual ring R = k[y_1..y_N] acted on by
/// contraction.
struct InverseForm {
    Polynomial form;
    int degree = 0;

    static InverseForm make(Polynomial g) {
        if (g.isZero()) throw InvalidArgumentError("inverse form must be nonzero");
        if (!g.isHomogeneous()) throw NotHomogeneousError("inverse form must be homogeneous");
        int d = g.degree();
        return InverseForm{std::move(g), d};
    }

    static InverseForm parse(const std::string& text, const RingPtr& dualRing) {
        return make(parsePolynomial(text, dualRing));
    }

    const RingPtr& ring() const { return form.ring(); }
};

/// The polynomial ring S = k[x_1..x_N] acting on R = k[y_1..y_N].
inline RingPtr dualActionRing(const RingPtr& dualRing, const std::string& stem = "x") {
    return RingContext::make(stem, dualRing->varCount(), dualRing->field());
}

namespace detail {

/// Falling factorial prod_i beta_i (beta_i - 1) ... (beta_i - alpha_i + 1),
/// i.e. the coefficient of the partial derivative x^alpha applied to y^beta.
inline mpz_class contractionCoefficient(const Monomial& beta, const Monomial& alpha) {
    mpz_class c = 1;
    for (std::size_t i = 0; i < beta.nvars(); ++i) {
        for (int k = 0; k < alpha.exponent(i); ++k) c *= beta.exponent(i) - k;
    }
    return c;
}

} // namespace detail

/// Contraction f(g): the action x^alpha(y^beta) = alpha! C(beta, alpha)
/// y^{beta - alpha}, extended bilinearly.
inline Polynomial contract(const Polynomial& f, const InverseForm& g) {
    const RingPtr& R = g.ring();
    if (f.ring()->varCount() != R->varCount())
        throw RingMismatchError("contraction requires matching variable counts");
    if (f.ring()->field() != R->field()) throw RingMismatchError("contraction field mismatch");
    const Field field = R->field();
    if (!field.isRational() && static_cast<int>(field.prime) <= g.degree)
        throw FieldTooSmallError("characteristic must exceed the form degree");
    Polynomial out(R);
    for (const auto& [alpha, cf] : f.terms()) {
        for (const auto& [beta, cg] : g.form.terms()) {
            if (!alpha.divides(beta)) continue;
            Scalar c = Scalar::fromRational(mpq_class(detail::contractionCoefficient(beta, alpha)),
                                            field);
            out.addTerm(beta / alpha, cf * cg * c);
        }
    }
    return out;
}

/// Catalecticant pairing S_j x R_{d-j}: columns indexed by the degree-j
/// monomials of S, rows by the degree-(d-j) monomials of R, so that the right
/// kernel is the degree-j piece of g^perp.
struct Catalecticant {
    int sourceDegree = 0;
    std::vector<Monomial> sourceMonomials; // basis of S_j (columns)
    std::vector<Monomial> targetMonomials; // basis of R_{d-j} (rows)
    Matrix matrix;
    std::size_t rank = 0;
};

inline Catalecticant catalecticant(const InverseForm& g, int j, const RingPtr& S) {
    if (j < 0 || j > g.degree) throw InvalidArgumentError("catalecticant degree out of range");
    const RingPtr& R = g.ring();
    std::vector<Monomial> source = monomialsOfDegree(S->varCount(), j);
    std::vector<Monomial> target = monomialsOfDegree(R->varCount(), g.degree - j);
    Matrix m(target.size(), source.size(), R->field());
    std::map<Monomial, std::size_t, MonomialDegRevLexGreater> rowIndex;
    for (std::size_t r = 0; r < target.size(); ++r) rowIndex[target[r]] = r;
    for (std::size_t c = 0; c < source.size(); ++c) {
        Polynomial img = contract(
            Polynomial::monomial(S, source[c], Scalar::one(S->field())), g);
        for (const auto& [mono, coeff] : img.terms()) m.at(rowIndex.at(mono), c) = coeff;
    }
    std::size_t rank = m.rank();
    return Catalecticant{j, std::move(source), std::move(target), std::move(m), rank};
}

/// Number of essential variables: the rank of the first catalecticant, equal
/// to h_{S/g^perp}(1). The form is a cone iff this is less than N.
inline int essentialVariables(const InverseForm& g) {
    RingPtr S = dualActionRing(g.ring());
    return static_cast<int>(catalecticant(g, 1, S).rank);
}

/// Apolar ideal g^perp, generated by the kernels of the contraction maps
/// S_j -> R_{d-j} for j = 1..d (reduced to minimal generators), plus the
/// degree-(d+1) generator in the single-essential-variable case.
inline Ideal apolarIdeal(const InverseForm& g, const RingPtr& S) {
    const RingPtr& R = g.ring();
    if (S->varCount() != R->varCount() || S->field() != R->field())
        throw RingMismatchError("apolar ideal: ambient ring mismatch");
    Ideal out(S);
    PolyEchelon span(S); // span of the ideal in the current degree
    int essential = -1;
    for (int j = 1; j <= g.degree + 1; ++j) {
        // push the previous degree's span up by one
        PolyEchelon next(S);
        for (const auto& [lead, row] : span.rows())
            for (std::size_t i = 0; i < S->varCount(); ++i)
                next.insert(row * Polynomial::variable(S, i));
        span = std::move(next);

        if (j == g.degree + 1) {
            if (essential != 1) break; // no generator above degree d unless g is a pure power
            for (const auto& m : monomialsOfDegree(S->varCount(), j)) {
                Polynomial p = Polynomial::monomial(S, m, Scalar::one(S->field()));
                if (span.insert(p)) out.addGenerator(p);
            }
            break;
        }

        Catalecticant cat = catalecticant(g, j, S);
        if (j == 1) essential = static_cast<int>(cat.rank);
        for (const auto& v : cat.matrix.kernelBasis()) {
            Polynomial p(S);
            for (std::size_t c = 0; c < cat.sourceMonomials.size(); ++c)
                p = p + Polynomial::monomial(S, cat.sourceMonomials[c], v[c]);
            if (span.insert(p)) out.addGenerator(p); // new minimal generator
        }
    }
    return out;
}

inline Ideal apolarIdeal(const InverseForm& g) { return apolarIdeal(g, dualActionRing(g.ring())); }

/// Per-degree minimal generator counts of a homogeneous ideal.
struct MinimalGeneratorProfile {
    std::map<int, long> countsByDegree;
    long beta = 0; // count in degree 3

    long count(int degree) const {
        auto it = countsByDegree.find(degree);
        return it == countsByDegree.end() ? 0 : it->second;
    }
};

/// count(j) = dim_k I_j - dim_k (S_1 I_{j-1})_j, by degreewise echelon.
inline MinimalGeneratorProfile minimalGeneratorCounts(const Ideal& I, int maxDegree) {
    const RingPtr& ring = I.ring();
    for (const auto& g : I.generators())
        if (!g.isHomogeneous()) throw NotHomogeneousError("ideal has a non-homogeneous generator");
    MinimalGeneratorProfile profile;
    PolyEchelon span(ring);
    for (int j = 0; j <= maxDegree; ++j) {
        PolyEchelon next(ring);
        for (const auto& [lead, row] : span.rows())
            for (std::size_t i = 0; i < ring->varCount(); ++i)
                next.insert(row * Polynomial::variable(ring, i));
        long fromBelow = static_cast<long>(next.dimension());
        for (const auto& g : I.generators())
            if (g.degree() == j) next.insert(g);
        long count = static_cast<long>(next.dimension()) - fromBelow;
        if (count > 0) profile.countsByDegree[j] = count;
        span = std::move(next);
    }
    profile.beta = profile.count(3);
    return profile;
}

/// Is there a nonzero linear form l with l(g) a rank-1
/// quadric? Decided by saturating the 2x2 minor ideal of the symmetric
/// contraction matrix over the coefficient space.
inline bool existsRankOneContraction(const InverseForm& g) {
    const RingPtr& R = g.ring();
    if (g.degree != 3 || R->varCount() != 4)
        throw InvalidArgumentError("rank-1 contraction test expects a cubic in 4 variables");
    if (essentialVariables(g) < 4)
        throw InvalidArgumentError("rank-1 contraction test expects a non-cone cubic");
    RingPtr S = dualActionRing(R);
    RingPtr C = RingContext::make("c", 4, R->field());

    // M[j][k](c) = sum_i c_i * (x_i x_j x_k)(g), the Hessian-type matrix of
    // the pencil l(g) with l = sum c_i x_i
    std::vector<std::vector<Polynomial>> M(4, std::vector<Polynomial>(4, Polynomial::zero(C)));
    for (std::size_t j = 0; j < 4; ++j)
        for (std::size_t k = j; k < 4; ++k) {
            Polynomial entry(C);
            for (std::size_t i = 0; i < 4; ++i) {
                std::vector<int> e(4, 0);
                e[i] += 1;
                e[j] += 1;
                e[k] += 1;
                Polynomial full = contract(
                    Polynomial::monomial(S, Monomial(e), Scalar::one(S->field())), g);
                Scalar c = full.isZero() ? Scalar::zero(C->field())
                                         : full.terms().begin()->second;
                entry = entry + Polynomial::variable(C, i) * Polynomial::constant(c, C);
            }
            M[j][k] = entry;
            M[k][j] = entry;
        }

    Ideal minors(C);
    for (std::size_t r1 = 0; r1 < 4; ++r1)
        for (std::size_t r2 = r1 + 1; r2 < 4; ++r2)
            for (std::size_t c1 = 0; c1 < 4; ++c1)
                for (std::size_t c2 = c1 + 1; c2 < 4; ++c2)
                    minors.addGenerator(M[r1][c1] * M[r2][c2] - M[r1][c2] * M[r2][c1]);

    Ideal irrelevant(C);
    for (std::size_t i = 0; i < 4; ++i) irrelevant.addGenerator(Polynomial::variable(C, i));
    if (minors.isZeroIdeal()) return true; // the whole pencil is rank <= 1
    Ideal sat = saturate(minors, irrelevant);
    return !sat.groebner().containsUnit();
}

} // namespace hilb10
