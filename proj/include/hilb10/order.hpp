#pragma once

#include <cstddef>

#include "monomial.hpp"

namespace hilb10 {

/// Total monomial order: degrevlex, lex, or a two-block elimination order whose
/// leading block (the first `front` variables) is compared by degrevlex first.
struct MonomialOrder {
    enum class Kind { DegRevLex, Lex, Block };

    Kind kind = Kind::DegRevLex;
    std::size_t front = 0;

    static MonomialOrder degrevlex() { return MonomialOrder{Kind::DegRevLex, 0}; }
    static MonomialOrder lex() { return MonomialOrder{Kind::Lex, 0}; }
    static MonomialOrder blockElimination(std::size_t frontVariableCount) {
        return MonomialOrder{Kind::Block, frontVariableCount};
    }

    bool operator==(const MonomialOrder& o) const { return kind == o.kind && front == o.front; }

    /// +1 if a > b, -1 if a < b, 0 if equal.
    int cmp(const Monomial& a, const Monomial& b) const {
        switch (kind) {
            case Kind::DegRevLex:
                return Monomial::cmpDegRevLex(a, b);
            case Kind::Lex:
                return Monomial::cmpLex(a, b);
            case Kind::Block:
                return cmpBlock(a, b);
        }
        return 0;
    }

    bool greater(const Monomial& a, const Monomial& b) const { return cmp(a, b) > 0; }

private:
    int cmpBlock(const Monomial& a, const Monomial& b) const {
        // degrevlex on the front block, then degrevlex on the tail
        int da = 0, db = 0;
        for (std::size_t i = 0; i < front; ++i) {
            da += a.exponent(i);
            db += b.exponent(i);
        }
        if (da != db) return da > db ? 1 : -1;
        for (std::size_t i = front; i-- > 0;)
            if (a.exponent(i) != b.exponent(i)) return a.exponent(i) < b.exponent(i) ? 1 : -1;
        int ta = a.degree() - da, tb = b.degree() - db;
        if (ta != tb) return ta > tb ? 1 : -1;
        for (std::size_t i = a.nvars(); i-- > front;)
            if (a.exponent(i) != b.exponent(i)) return a.exponent(i) < b.exponent(i) ? 1 : -1;
        return 0;
    }
};

} // namespace hilb10
