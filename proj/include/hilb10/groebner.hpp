#pragma once

#include <algorithm>
#include <set>
#include <utility>
#include <vector>

#include "order.hpp"
#include "polynomial.hpp"

namespace hilb10 {

namespace detail {

struct Term {
    Monomial m;
    Scalar c;
};

/// Term list sorted descending under the active order; the Buchberger working
/// representation.
struct OrdPoly {
    std::vector<Term> t;

    bool isZero() const { return t.empty(); }
    const Monomial& lead() const { return t.front().m; }
    const Scalar& leadCoeff() const { return t.front().c; }
};

inline OrdPoly toOrd(const Polynomial& p, const MonomialOrder& ord) {
    OrdPoly r;
    r.t.reserve(p.termCount());
    for (const auto& [m, c] : p.terms()) r.t.push_back({m, c});
    std::sort(r.t.begin(), r.t.end(),
              [&](const Term& a, const Term& b) { return ord.greater(a.m, b.m); });
    return r;
}

inline Polynomial fromOrd(const OrdPoly& p, const RingPtr& ring) {
    Polynomial r(ring);
    for (const auto& term : p.t) r.addTerm(term.m, term.c);
    return r;
}

/// a - s * x^m * b, merged in order.
inline OrdPoly subtractScaled(const OrdPoly& a, const Scalar& s, const Monomial& mono,
                              const OrdPoly& b, const MonomialOrder& ord) {
    OrdPoly r;
    r.t.reserve(a.t.size() + b.t.size());
    std::size_t i = 0, j = 0;
    while (i < a.t.size() || j < b.t.size()) {
        if (j == b.t.size()) {
            r.t.push_back(a.t[i++]);
            continue;
        }
        Monomial bm = b.t[j].m * mono;
        if (i == a.t.size()) {
            r.t.push_back({bm, -(s * b.t[j].c)});
            ++j;
            continue;
        }
        int cmp = ord.cmp(a.t[i].m, bm);
        if (cmp > 0) {
            r.t.push_back(a.t[i++]);
        } else if (cmp < 0) {
            r.t.push_back({bm, -(s * b.t[j].c)});
            ++j;
        } else {
            Scalar c = a.t[i].c - s * b.t[j].c;
            if (!c.isZero()) r.t.push_back({a.t[i].m, c});
            ++i;
            ++j;
        }
    }
    return r;
}

/// Scale to a canonical representative: over Q, primitive integer coefficients
/// with positive lead; over F_p, monic.
inline void normalize(OrdPoly& p, const Field& field) {
    if (p.t.empty()) return;
    if (!field.isRational()) {
        Scalar inv = p.leadCoeff().inverse();
        for (auto& term : p.t) term.c = term.c * inv;
        return;
    }
    mpz_class denLcm = 1, numGcd = 0;
    for (const auto& term : p.t) {
        mpz_lcm(denLcm.get_mpz_t(), denLcm.get_mpz_t(), term.c.value().get_den().get_mpz_t());
        mpz_gcd(numGcd.get_mpz_t(), numGcd.get_mpz_t(), term.c.value().get_num().get_mpz_t());
    }
    mpq_class factor(denLcm, numGcd);
    factor.canonicalize();
    if (p.leadCoeff().sgn() < 0) factor = -factor;
    Scalar f = Scalar::fromRational(factor, field);
    for (auto& term : p.t) term.c = term.c * f;
}

/// Full normal form of f against the (not necessarily Groebner) list G,
/// optionally skipping one element of G.
inline OrdPoly reduceFull(OrdPoly f, const std::vector<OrdPoly>& G, const MonomialOrder& ord,
                          const Field& field, std::size_t skip = static_cast<std::size_t>(-1)) {
    OrdPoly result;
    while (!f.isZero()) {
        bool reduced = false;
        for (std::size_t k = 0; k < G.size(); ++k) {
            if (k == skip || G[k].isZero()) continue;
            const OrdPoly& g = G[k];
            if (g.lead().divides(f.lead())) {
                Scalar s = f.leadCoeff() / g.leadCoeff();
                f = subtractScaled(f, s, f.lead() / g.lead(), g, ord);
                reduced = true;
                break;
            }
        }
        if (!reduced) {
            result.t.push_back(f.t.front());
            f.t.erase(f.t.begin());
        }
    }
    return result;
}

inline OrdPoly sPolynomial(const OrdPoly& f, const OrdPoly& g, const MonomialOrder& ord) {
    Monomial l = f.lead().lcm(g.lead());
    // lcm/lt(f) * f - (cf/cg) * lcm/lt(g) * g, built as two scaled subtractions
    OrdPoly zero;
    OrdPoly a = subtractScaled(zero, -(Scalar::one(f.leadCoeff().field()) / f.leadCoeff()),
                               l / f.lead(), f, ord);
    return subtractScaled(a, Scalar::one(g.leadCoeff().field()) / g.leadCoeff(), l / g.lead(), g,
                          ord);
}

} // namespace detail

/// Reduced Groebner basis: monic elements, pairwise irreducible.
struct GroebnerBasis {
    std::vector<Polynomial> elements;
    MonomialOrder order;
    RingPtr ring;

    std::vector<Monomial> leadingMonomials() const {
        std::vector<Monomial> lm;
        lm.reserve(elements.size());
        for (const auto& g : elements) lm.push_back(g.leadingMonomial(order));
        return lm;
    }

    bool containsUnit() const {
        return elements.size() == 1 && elements.front().leadingMonomial(order).isUnit();
    }
};

/// Remainder of f on division by G; zero iff f lies in the ideal of G.
inline Polynomial normalForm(const Polynomial& f, const GroebnerBasis& G) {
    requireSameRing(f.ring(), G.ring);
    std::vector<detail::OrdPoly> basis;
    basis.reserve(G.elements.size());
    for (const auto& g : G.elements) basis.push_back(detail::toOrd(g, G.order));
    detail::OrdPoly r =
        detail::reduceFull(detail::toOrd(f, G.order), basis, G.order, f.ring()->field());
    return detail::fromOrd(r, f.ring());
}

/// Buchberger's algorithm with the coprime-lead and chain criteria, followed by
/// autoreduction to the unique reduced basis.
inline GroebnerBasis buchberger(const std::vector<Polynomial>& generators, const RingPtr& ring,
                                const MonomialOrder& ord = MonomialOrder::degrevlex()) {
    using detail::OrdPoly;
    const Field field = ring->field();

    std::vector<OrdPoly> basis;
    for (const auto& g : generators) {
        if (g.isZero()) continue;
        OrdPoly p = detail::toOrd(g, ord);
        detail::normalize(p, field);
        basis.push_back(std::move(p));
    }

    // interreduce the input first; redundant generators only create pairs
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t i = 0; i < basis.size(); ++i) {
            OrdPoly r = detail::reduceFull(basis[i], basis, ord, field, i);
            detail::normalize(r, field);
            if (r.t.size() != basis[i].t.size() ||
                !std::equal(r.t.begin(), r.t.end(), basis[i].t.begin(),
                            [](const detail::Term& a, const detail::Term& b) {
                                return a.m == b.m && a.c == b.c;
                            })) {
                changed = true;
                if (r.isZero()) {
                    basis.erase(basis.begin() + static_cast<long>(i));
                    --i;
                } else {
                    basis[i] = std::move(r);
                }
            }
        }
    }

    using Pair = std::pair<std::size_t, std::size_t>;
    // pair queue ordered by normal selection (minimal lcm degree, ties broken
    // by the order on the lcm), with a key set for the chain criterion
    struct QueueEntry {
        int degree;
        Monomial lcm;
        Pair pair;
    };
    struct QueueCmp {
        MonomialOrder ord;
        bool operator()(const QueueEntry& a, const QueueEntry& b) const {
            if (a.degree != b.degree) return a.degree < b.degree;
            int c = 0;
            if (!(a.lcm == b.lcm)) c = ord.greater(b.lcm, a.lcm) ? -1 : 1;
            if (c != 0) return c < 0;
            return a.pair < b.pair;
        }
    };
    std::set<QueueEntry, QueueCmp> queue{QueueCmp{ord}};
    std::set<Pair> pending;
    auto addPairs = [&](std::size_t upTo) {
        for (std::size_t i = 0; i < upTo; ++i) {
            Monomial l = basis[i].lead().lcm(basis[upTo].lead());
            queue.insert(QueueEntry{l.degree(), std::move(l), {i, upTo}});
            pending.insert({i, upTo});
        }
    };
    for (std::size_t j = 1; j < basis.size(); ++j) addPairs(j);

    while (!queue.empty()) {
        QueueEntry best = *queue.begin();
        queue.erase(queue.begin());
        auto [i, j] = best.pair;
        pending.erase(best.pair);

        if (basis[i].lead().coprime(basis[j].lead())) continue;

        // chain criterion
        bool skip = false;
        for (std::size_t k = 0; k < basis.size() && !skip; ++k) {
            if (k == i || k == j) continue;
            if (!basis[k].lead().divides(best.lcm)) continue;
            Pair ik{std::min(i, k), std::max(i, k)};
            Pair jk{std::min(j, k), std::max(j, k)};
            if (!pending.count(ik) && !pending.count(jk)) skip = true;
        }
        if (skip) continue;

        OrdPoly s = detail::sPolynomial(basis[i], basis[j], ord);
        OrdPoly r = detail::reduceFull(std::move(s), basis, ord, field);
        if (!r.isZero()) {
            detail::normalize(r, field);
            basis.push_back(std::move(r));
            addPairs(basis.size() - 1);
        }
    }

    // reduce to the unique reduced basis: discard elements whose lead is
    // divisible by another lead, then fully reduce each tail
    std::vector<OrdPoly> minimal;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
            if (i == j) continue;
            if (basis[j].lead().divides(basis[i].lead())) {
                if (basis[i].lead() == basis[j].lead() && i < j) continue;
                redundant = true;
            }
        }
        if (!redundant) minimal.push_back(basis[i]);
    }
    std::vector<OrdPoly> reduced;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        OrdPoly r = detail::reduceFull(minimal[i], minimal, ord, field, i);
        // make monic
        Scalar inv = r.leadCoeff().inverse();
        for (auto& term : r.t) term.c = term.c * inv;
        reduced.push_back(std::move(r));
    }
    std::sort(reduced.begin(), reduced.end(),
              [&](const OrdPoly& a, const OrdPoly& b) { return ord.greater(a.lead(), b.lead()); });

    GroebnerBasis out;
    out.order = ord;
    out.ring = ring;
    out.elements.reserve(reduced.size());
    for (const auto& p : reduced) out.elements.push_back(detail::fromOrd(p, ring));
    return out;
}

} // namespace hilb10
