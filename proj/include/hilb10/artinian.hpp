#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "ideal.hpp"
#include "linalg.hpp"

namespace hilb10 {

/// Standard-monomial presentation of a finite-dimensional quotient S/I.
struct QuotientAlgebra {
    Ideal ideal;
    std::vector<Monomial> basis; // monomials outside LT(I), an order ideal
    long dim = 0;
};

/// Hilbert function as the vector (n_0, ..., n_e).
struct HilbertFunction {
    std::vector<long> values;

    long sum() const {
        long s = 0;
        for (long v : values) s += v;
        return s;
    }
    bool operator==(const HilbertFunction& o) const { return values == o.values; }
    bool operator!=(const HilbertFunction& o) const { return !(*this == o); }

    std::string str() const {
        std::string s = "(";
        for (std::size_t i = 0; i < values.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(values[i]);
        }
        return s + ")";
    }
};

/// Numerical profile of a local Artinian quotient.
struct AlgebraProfile {
    long dim = 0;
    HilbertFunction hilbert;
    long emdim = 0;  // h_A(1)
    long msdeg = 0;  // largest e with M^e != 0
    long socleDim = 0;
    std::vector<Polynomial> socleBasis; // coset representatives on the monomial basis
    bool gorenstein = false;
};

/// Monomial k-basis of S/I. Requires LT(I) to contain a pure power of every
/// variable (the zero-dimensionality test).
inline QuotientAlgebra quotientBasis(const Ideal& I) {
    const RingPtr& ring = I.ring();
    if (I.isZeroIdeal()) throw NotZeroDimensionalError("zero ideal has infinite quotient");
    const GroebnerBasis& gb = I.groebner();
    std::vector<Monomial> leads = gb.leadingMonomials();

    const std::size_t n = ring->varCount();
    std::vector<int> bound(n, -1); // minimal pure-power exponent per variable
    for (const auto& lm : leads) {
        for (std::size_t i = 0; i < n; ++i) {
            if (lm.exponent(i) == lm.degree()) {
                int e = lm.exponent(i);
                if (bound[i] < 0 || e < bound[i]) bound[i] = e;
            }
        }
    }
    for (std::size_t i = 0; i < n; ++i)
        if (bound[i] < 0)
            throw NotZeroDimensionalError("no pure power of " + ring->variable(i) +
                                          " among leading terms");

    std::vector<Monomial> basis;
    std::vector<int> e(n, 0);
    auto rec = [&](auto&& self, std::size_t i) -> void {
        if (i == n) {
            Monomial m{e};
            for (const auto& lm : leads)
                if (lm.divides(m)) return;
            basis.push_back(std::move(m));
            return;
        }
        for (e[i] = 0; e[i] < bound[i]; ++e[i]) self(self, i + 1);
        e[i] = 0;
    };
    rec(rec, 0);
    std::sort(basis.begin(), basis.end(), [](const Monomial& a, const Monomial& b) {
        return Monomial::cmpDegRevLex(a, b) < 0;
    });
    long dim = static_cast<long>(basis.size());
    return QuotientAlgebra{I, std::move(basis), dim};
}

inline long quotientDimension(const Ideal& I) { return quotientBasis(I).dim; }

namespace detail {

/// dim_k S/(I + m^cut).
inline long truncatedDimension(const Ideal& I, int cut) {
    Ideal J(I.ring(), I.generators());
    for (const auto& m : monomialsOfDegree(I.ring()->varCount(), cut))
        J.addGenerator(Polynomial::monomial(I.ring(), m, Scalar::one(I.ring()->field())));
    return quotientBasis(J).dim;
}

} // namespace detail

/// h_A(i) = dim_k S/(I + m^{i+1}) - dim_k S/(I + m^i), for a quotient that is
/// zero-dimensional and supported only at the origin.
inline HilbertFunction localHilbertFunction(const Ideal& I) {
    long total = quotientBasis(I).dim;
    HilbertFunction h;
    long prev = 0, acc = 0;
    for (int i = 1;; ++i) {
        long cur = detail::truncatedDimension(I, i);
        long step = cur - prev;
        if (step == 0) {
            if (acc != total)
                throw NotLocalAtOriginError("quotient is not supported only at the origin");
            break;
        }
        h.values.push_back(step);
        acc += step;
        prev = cur;
        if (acc > total) throw NotLocalAtOriginError("m-adic dimensions exceed dim S/I");
    }
    return h;
}

/// Per-degree dimensions of S/I for homogeneous zero-dimensional I, computed
/// degree by degree as dim S_j - dim I_j with an echelon span of I_j.
inline HilbertFunction gradedHilbertFunction(const Ideal& I, int hardCap = 64) {
    const RingPtr& ring = I.ring();
    if (I.isZeroIdeal()) throw NotZeroDimensionalError("zero ideal has infinite quotient");
    for (const auto& g : I.generators())
        if (!g.isHomogeneous()) throw NotHomogeneousError("ideal has a non-homogeneous generator");

    const std::size_t n = ring->varCount();
    HilbertFunction h;
    PolyEchelon prev(ring); // echelon of I_{j-1}
    for (int j = 0;; ++j) {
        if (j > hardCap) throw NotZeroDimensionalError("graded quotient does not terminate");
        PolyEchelon cur(ring);
        for (const auto& [lead, row] : prev.rows())
            for (std::size_t i = 0; i < n; ++i)
                cur.insert(row * Polynomial::variable(ring, i));
        for (const auto& g : I.generators())
            if (g.degree() == j) cur.insert(g);
        long hj = dimFormSpace(n, j) - static_cast<long>(cur.dimension());
        if (hj == 0) break;
        h.values.push_back(hj);
        prev = std::move(cur);
    }
    return h;
}

/// Socle, Hilbert function and the derived Gorenstein data of S/I.
inline AlgebraProfile socleAndProfile(const Ideal& I) {
    QuotientAlgebra Q = quotientBasis(I);
    AlgebraProfile profile;
    profile.dim = Q.dim;
    profile.hilbert = localHilbertFunction(I);
    profile.emdim = profile.hilbert.values.size() > 1 ? profile.hilbert.values[1] : 0;
    profile.msdeg = static_cast<long>(profile.hilbert.values.size()) - 1;

    const RingPtr& ring = I.ring();
    const std::size_t n = ring->varCount();
    const GroebnerBasis& gb = I.groebner();
    std::map<Monomial, std::size_t, MonomialDegRevLexGreater> index;
    for (std::size_t i = 0; i < Q.basis.size(); ++i) index[Q.basis[i]] = i;

    // joint kernel of multiplication by x_1, ..., x_n on the monomial basis
    Matrix stacked(n * Q.basis.size(), Q.basis.size(), ring->field());
    for (std::size_t v = 0; v < n; ++v) {
        Polynomial xv = Polynomial::variable(ring, v);
        for (std::size_t b = 0; b < Q.basis.size(); ++b) {
            Polynomial img = normalForm(
                xv * Polynomial::monomial(ring, Q.basis[b], Scalar::one(ring->field())), gb);
            for (const auto& [m, c] : img.terms()) stacked.at(v * Q.basis.size() + index.at(m), b) = c;
        }
    }
    for (const auto& v : stacked.kernelBasis()) {
        Polynomial s(ring);
        for (std::size_t b = 0; b < Q.basis.size(); ++b)
            s = s + Polynomial::monomial(ring, Q.basis[b], v[b]);
        profile.socleBasis.push_back(std::move(s));
    }
    profile.socleDim = static_cast<long>(profile.socleBasis.size());
    profile.gorenstein = profile.socleDim == 1;
    return profile;
}

} // namespace hilb10
