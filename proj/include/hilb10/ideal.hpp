#pragma once

#include <deque>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "groebner.hpp"
#include "polynomial.hpp"

namespace hilb10 {

/// Finitely generated ideal with a lazily computed, write-once cached reduced
/// Groebner basis.
class Ideal {
public:
    explicit Ideal(RingPtr ring) : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {}

    Ideal(RingPtr ring, std::vector<Polynomial> generators)
        : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
        for (auto& g : generators) addGenerator(std::move(g));
    }

    static Ideal fromStrings(const RingPtr& ring, const std::vector<std::string>& gens) {
        Ideal I(ring);
        for (const auto& s : gens) I.addGenerator(parsePolynomial(s, ring));
        return I;
    }

    const RingPtr& ring() const { return ring_; }
    const std::vector<Polynomial>& generators() const { return gens_; }
    bool isZeroIdeal() const { return gens_.empty(); }

    void addGenerator(Polynomial g) {
        requireSameRing(g.ring(), ring_);
        if (g.isZero()) return;
        gens_.push_back(std::move(g));
        cache_ = std::make_shared<Cache>();
    }

    const GroebnerBasis& groebner(const MonomialOrder& ord = MonomialOrder::degrevlex()) const {
        std::lock_guard<std::mutex> lock(cache_->mutex);
        for (const auto& gb : cache_->bases)
            if (gb.order == ord) return gb;
        cache_->bases.push_back(buchberger(gens_, ring_, ord));
        return cache_->bases.back();
    }

private:
    struct Cache {
        std::mutex mutex;
        std::deque<GroebnerBasis> bases; // deque: stable references across growth
    };

    RingPtr ring_;
    std::vector<Polynomial> gens_;
    std::shared_ptr<Cache> cache_;
};

inline bool idealContains(const Ideal& I, const Polynomial& f) {
    if (f.isZero()) return true;
    if (I.isZeroIdeal()) return false;
    return normalForm(f, I.groebner()).isZero();
}

inline Ideal idealSum(const Ideal& I, const Ideal& J) {
    requireSameRing(I.ring(), J.ring());
    Ideal r(I.ring(), I.generators());
    for (const auto& g : J.generators()) r.addGenerator(g);
    return r;
}

inline Ideal idealProduct(const Ideal& I, const Ideal& J) {
    requireSameRing(I.ring(), J.ring());
    Ideal r(I.ring());
    for (const auto& f : I.generators())
        for (const auto& g : J.generators()) r.addGenerator(f * g);
    return r;
}

inline Ideal idealSquare(const Ideal& I) {
    // pairwise products without duplicates
    Ideal r(I.ring());
    const auto& g = I.generators();
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = i; j < g.size(); ++j) r.addGenerator(g[i] * g[j]);
    return r;
}

inline bool equalIdeals(const Ideal& I, const Ideal& J) {
    requireSameRing(I.ring(), J.ring());
    if (I.isZeroIdeal() || J.isZeroIdeal()) return I.isZeroIdeal() && J.isZeroIdeal();
    const GroebnerBasis& a = I.groebner();
    const GroebnerBasis& b = J.groebner();
    if (a.elements.size() != b.elements.size()) return false;
    for (std::size_t i = 0; i < a.elements.size(); ++i)
        if (a.elements[i] != b.elements[i]) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Ring extension / projection plumbing
// ---------------------------------------------------------------------------

/// Map f into `target`, which must contain every variable of f's ring by name.
inline Polynomial mapToRing(const Polynomial& f, const RingPtr& target) {
    const RingPtr& src = f.ring();
    if (src->field() != target->field()) throw RingMismatchError("field mismatch in ring map");
    std::vector<std::size_t> where(src->varCount());
    for (std::size_t i = 0; i < src->varCount(); ++i) {
        auto idx = target->indexOf(src->variable(i));
        if (!idx) throw RingMismatchError("target ring lacks variable " + src->variable(i));
        where[i] = *idx;
    }
    Polynomial r(target);
    for (const auto& [m, c] : f.terms()) {
        std::vector<int> e(target->varCount(), 0);
        for (std::size_t i = 0; i < src->varCount(); ++i) e[where[i]] = m.exponent(i);
        r.addTerm(Monomial(std::move(e)), Scalar::fromRational(c.value(), target->field()));
    }
    return r;
}

/// Drop the first `frontCount` variables; every term must be free of them.
inline Polynomial dropFrontVariables(const Polynomial& f, std::size_t frontCount,
                                     const RingPtr& target) {
    Polynomial r(target);
    for (const auto& [m, c] : f.terms()) {
        std::vector<int> e(m.exponents().begin() + static_cast<long>(frontCount),
                           m.exponents().end());
        r.addTerm(Monomial(std::move(e)), Scalar::fromRational(c.value(), target->field()));
    }
    return r;
}

/// Generators of I ∩ k[x_{frontCount+1}, ...], via a block elimination basis.
inline Ideal eliminate(const Ideal& I, std::size_t frontCount) {
    const RingPtr& ring = I.ring();
    if (frontCount == 0 || frontCount >= ring->varCount())
        throw InvalidArgumentError("eliminate: front block out of range");
    std::vector<std::string> rest(ring->variables().begin() + static_cast<long>(frontCount),
                                  ring->variables().end());
    RingPtr target = RingContext::make(rest, ring->field());
    Ideal out(target);
    if (I.isZeroIdeal()) return out;
    const GroebnerBasis& gb = I.groebner(MonomialOrder::blockElimination(frontCount));
    for (const auto& g : gb.elements) {
        bool free = true;
        for (const auto& [m, c] : g.terms())
            for (std::size_t i = 0; i < frontCount && free; ++i)
                if (m.exponent(i) > 0) free = false;
        if (free) out.addGenerator(dropFrontVariables(g, frontCount, target));
    }
    return out;
}

/// I ∩ J via the tag variable: eliminate t from t·I + (1-t)·J.
inline Ideal intersect(const Ideal& I, const Ideal& J) {
    requireSameRing(I.ring(), J.ring());
    const RingPtr& ring = I.ring();
    if (I.isZeroIdeal() || J.isZeroIdeal()) return Ideal(ring);
    std::string tag = "t_";
    while (ring->indexOf(tag)) tag += "_";
    std::vector<std::string> vars;
    vars.push_back(tag);
    vars.insert(vars.end(), ring->variables().begin(), ring->variables().end());
    RingPtr ext = RingContext::make(vars, ring->field());
    Polynomial t = Polynomial::variable(ext, 0);
    Polynomial oneMinusT = Polynomial::constant(1, ext) - t;
    Ideal tagged(ext);
    for (const auto& f : I.generators()) tagged.addGenerator(t * mapToRing(f, ext));
    for (const auto& g : J.generators()) tagged.addGenerator(oneMinusT * mapToRing(g, ext));
    Ideal elim = eliminate(tagged, 1);
    Ideal out(ring);
    for (const auto& g : elim.generators()) out.addGenerator(mapToRing(g, ring));
    return out;
}

/// Exact division f / g; throws if g does not divide f.
inline Polynomial divideExact(const Polynomial& f, const Polynomial& g) {
    requireSameRing(f.ring(), g.ring());
    if (g.isZero()) throw InvalidArgumentError("division by zero polynomial");
    MonomialOrder ord = MonomialOrder::degrevlex();
    Polynomial rem = f;
    Polynomial quot(f.ring());
    const Monomial& lg = g.leadingMonomial(ord);
    Scalar cg = g.leadingCoefficient(ord);
    while (!rem.isZero()) {
        const Monomial& lr = rem.leadingMonomial(ord);
        if (!lg.divides(lr)) throw InvalidArgumentError("inexact polynomial division");
        Polynomial q = Polynomial::monomial(f.ring(), lr / lg, rem.leadingCoefficient(ord) / cg);
        quot = quot + q;
        rem = rem - q * g;
    }
    return quot;
}

/// I : f for a single nonzero f, via I ∩ (f) followed by exact division.
inline Ideal idealQuotientBy(const Ideal& I, const Polynomial& f) {
    requireSameRing(I.ring(), f.ring());
    if (f.isZero()) throw InvalidArgumentError("colon by zero polynomial");
    Ideal principal(I.ring());
    principal.addGenerator(f);
    Ideal meet = intersect(I, principal);
    Ideal out(I.ring());
    for (const auto& g : meet.generators()) out.addGenerator(divideExact(g, f));
    return out;
}

/// I : J = ∩_i (I : f_i) over the generators of J.
inline Ideal idealQuotient(const Ideal& I, const Ideal& J) {
    requireSameRing(I.ring(), J.ring());
    if (J.isZeroIdeal()) throw InvalidArgumentError("colon by the zero ideal");
    std::optional<Ideal> acc;
    for (const auto& f : J.generators()) {
        Ideal q = idealQuotientBy(I, f);
        acc = acc ? intersect(*acc, q) : q;
    }
    return *acc;
}

/// I : J^∞, iterating the colon until it stabilizes.
inline Ideal saturate(const Ideal& I, const Ideal& J) {
    Ideal current = I;
    for (;;) {
        Ideal next = idealQuotient(current, J);
        if (equalIdeals(next, current)) return current;
        current = std::move(next);
    }
}

} // namespace hilb10
