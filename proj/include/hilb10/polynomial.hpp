#pragma once

#include <cctype>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "monomial.hpp"
#include "order.hpp"
#include "ring.hpp"
#include "scalar.hpp"

namespace hilb10 {

/// Sparse multivariate polynomial with exact coefficients. Terms are stored in
/// descending degrevlex order; zero coefficients are never stored.
class Polynomial {
public:
    using TermMap = std::map<Monomial, Scalar, MonomialDegRevLexGreater>;

    explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

    static Polynomial zero(const RingPtr& ring) { return Polynomial(ring); }

    static Polynomial constant(const Scalar& c, const RingPtr& ring) {
        Polynomial p(ring);
        p.addTerm(Monomial::unit(ring->varCount()), c);
        return p;
    }

    static Polynomial constant(long c, const RingPtr& ring) {
        return constant(Scalar::fromInt(c, ring->field()), ring);
    }

    static Polynomial variable(const RingPtr& ring, std::size_t idx, int power = 1) {
        Polynomial p(ring);
        p.addTerm(Monomial::variable(ring->varCount(), idx, power),
                  Scalar::one(ring->field()));
        return p;
    }

    static Polynomial variable(const RingPtr& ring, const std::string& name, int power = 1) {
        auto idx = ring->indexOf(name);
        if (!idx) throw ParseError("unknown variable: " + name);
        return variable(ring, *idx, power);
    }

    static Polynomial monomial(const RingPtr& ring, const Monomial& m, const Scalar& c) {
        Polynomial p(ring);
        p.addTerm(m, c);
        return p;
    }

    const RingPtr& ring() const { return ring_; }
    const TermMap& terms() const { return terms_; }
    bool isZero() const { return terms_.empty(); }
    std::size_t termCount() const { return terms_.size(); }

    /// Total degree; -1 for the zero polynomial.
    int degree() const {
        int d = -1;
        for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
        return d;
    }

    bool isHomogeneous() const {
        if (terms_.empty()) return true;
        int d = terms_.begin()->first.degree();
        for (const auto& [m, c] : terms_)
            if (m.degree() != d) return false;
        return true;
    }

    bool isConstant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.isUnit());
    }

    Scalar coefficient(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Scalar::zero(ring_->field()) : it->second;
    }

    void addTerm(const Monomial& m, const Scalar& c) {
        if (c.isZero()) return;
        auto [it, inserted] = terms_.emplace(m, c);
        if (!inserted) {
            it->second = it->second + c;
            if (it->second.isZero()) terms_.erase(it);
        }
    }

    Polynomial operator+(const Polynomial& o) const {
        requireSameRing(ring_, o.ring_);
        Polynomial r = *this;
        for (const auto& [m, c] : o.terms_) r.addTerm(m, c);
        return r;
    }

    Polynomial operator-(const Polynomial& o) const {
        requireSameRing(ring_, o.ring_);
        Polynomial r = *this;
        for (const auto& [m, c] : o.terms_) r.addTerm(m, -c);
        return r;
    }

    Polynomial operator-() const {
        Polynomial r(ring_);
        for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
        return r;
    }

    Polynomial operator*(const Polynomial& o) const {
        requireSameRing(ring_, o.ring_);
        Polynomial r(ring_);
        for (const auto& [m1, c1] : terms_)
            for (const auto& [m2, c2] : o.terms_) r.addTerm(m1 * m2, c1 * c2);
        return r;
    }

    Polynomial operator*(const Scalar& c) const {
        Polynomial r(ring_);
        if (c.isZero()) return r;
        for (const auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
        return r;
    }

    bool operator==(const Polynomial& o) const {
        requireSameRing(ring_, o.ring_);
        return terms_ == o.terms_;
    }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    /// Leading monomial under an arbitrary order (linear scan of the term map).
    const Monomial& leadingMonomial(const MonomialOrder& ord) const {
        if (terms_.empty()) throw InvalidArgumentError("leading term of zero polynomial");
        if (ord == MonomialOrder::degrevlex()) return terms_.begin()->first;
        const Monomial* best = &terms_.begin()->first;
        for (const auto& [m, c] : terms_)
            if (ord.greater(m, *best)) best = &m;
        return *best;
    }

    Scalar leadingCoefficient(const MonomialOrder& ord) const {
        return coefficient(leadingMonomial(ord));
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string s;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            Scalar a = c;
            if (first) {
                if (a.sgn() < 0) {
                    s += "-";
                    a = -a;
                }
            } else {
                if (a.sgn() < 0) {
                    s += " - ";
                    a = -a;
                } else {
                    s += " + ";
                }
            }
            s += termStr(m, a);
            first = false;
        }
        return s;
    }

private:
    std::string termStr(const Monomial& m, const Scalar& c) const {
        std::string s;
        bool needCoeff = !c.isOne() || m.isUnit();
        if (needCoeff) s += c.str();
        for (std::size_t i = 0; i < m.nvars(); ++i) {
            int e = m.exponent(i);
            if (e == 0) continue;
            if (!s.empty()) s += "*";
            s += ring_->variable(i);
            if (e > 1) s += "^" + std::to_string(e);
        }
        return s;
    }

    RingPtr ring_;
    TermMap terms_;
};

inline Polynomial operator*(const Scalar& c, const Polynomial& p) { return p * c; }

// ---------------------------------------------------------------------------
// Parsing. Grammar (whitespace insignificant):
//   poly   := ['-'] term (('+'|'-') term)*
//   term   := coeff ('*' factor)* | factor ('*' factor)*
//   factor := var ('^' uint)?
//   coeff  := int ('/' uint)?
// ---------------------------------------------------------------------------

namespace detail {

class PolyParser {
public:
    PolyParser(const std::string& text, RingPtr ring) : s_(text), ring_(std::move(ring)) {}

    Polynomial parse() {
        Polynomial result(ring_);
        skipWs();
        bool negative = false;
        if (peek() == '-') {
            negative = true;
            ++pos_;
        } else if (peek() == '+') {
            ++pos_;
        }
        result = result + parseTerm(negative);
        skipWs();
        while (pos_ < s_.size()) {
            char c = s_[pos_];
            if (c != '+' && c != '-') throw ParseError("expected '+' or '-' near: " + rest());
            ++pos_;
            result = result + parseTerm(c == '-');
            skipWs();
        }
        return result;
    }

private:
    Polynomial parseTerm(bool negative) {
        skipWs();
        Scalar coeff = Scalar::one(ring_->field());
        bool sawCoeff = false;
        Monomial mono = Monomial::unit(ring_->varCount());
        if (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(peek())))) {
            coeff = parseCoeff();
            sawCoeff = true;
        } else if (isIdentStart(peek())) {
            mono = mono * parseFactor();
        } else {
            throw ParseError("expected term near: " + rest());
        }
        skipWs();
        while (pos_ < s_.size() && peek() == '*') {
            ++pos_;
            skipWs();
            if (!isIdentStart(peek())) throw ParseError("expected variable after '*' near: " + rest());
            mono = mono * parseFactor();
            skipWs();
        }
        if (negative) coeff = -coeff;
        Polynomial p(ring_);
        (void)sawCoeff;
        p.addTerm(mono, coeff);
        return p;
    }

    Scalar parseCoeff() {
        mpz_class num(parseUInt());
        skipWs();
        if (pos_ < s_.size() && peek() == '/') {
            ++pos_;
            skipWs();
            if (!(pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(peek()))))
                throw ParseError("expected denominator near: " + rest());
            mpz_class den(parseUInt());
            return Scalar::fromFraction(num, den, ring_->field());
        }
        return Scalar::fromRational(mpq_class(num), ring_->field());
    }

    Monomial parseFactor() {
        std::string name = parseIdent();
        auto idx = ring_->indexOf(name);
        if (!idx) throw ParseError("unknown variable: " + name);
        int power = 1;
        skipWs();
        if (pos_ < s_.size() && peek() == '^') {
            ++pos_;
            skipWs();
            if (!(pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(peek()))))
                throw ParseError("malformed exponent near: " + rest());
            power = std::stoi(parseUInt());
        }
        return Monomial::variable(ring_->varCount(), *idx, power);
    }

    std::string parseUInt() {
        std::string digits;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
            digits += s_[pos_++];
        if (digits.empty()) throw ParseError("expected number near: " + rest());
        return digits;
    }

    std::string parseIdent() {
        std::string name;
        if (!isIdentStart(peek())) throw ParseError("expected variable near: " + rest());
        while (pos_ < s_.size() &&
               (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
            name += s_[pos_++];
        return name;
    }

    static bool isIdentStart(char c) {
        return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
    }

    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
    void skipWs() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    std::string rest() const { return s_.substr(pos_, 24); }

    const std::string& s_;
    RingPtr ring_;
    std::size_t pos_ = 0;
};

} // namespace detail

inline Polynomial parsePolynomial(const std::string& text, const RingPtr& ring) {
    return detail::PolyParser(text, ring).parse();
}

/// Image of f under the ring map sending each assigned variable to the given
/// polynomial and every other variable to itself (in the target ring).
inline Polynomial substitute(const Polynomial& f,
                             const std::map<std::string, Polynomial>& assignments,
                             const RingPtr& target) {
    const RingPtr& src = f.ring();
    std::vector<Polynomial> images;
    images.reserve(src->varCount());
    for (std::size_t i = 0; i < src->varCount(); ++i) {
        const std::string& name = src->variable(i);
        auto it = assignments.find(name);
        if (it != assignments.end()) {
            requireSameRing(it->second.ring(), target);
            images.push_back(it->second);
        } else {
            auto idx = target->indexOf(name);
            if (!idx) throw ParseError("unknown variable in target ring: " + name);
            images.push_back(Polynomial::variable(target, *idx));
        }
    }
    for (const auto& [name, p] : assignments)
        if (!src->indexOf(name)) throw ParseError("unknown variable: " + name);
    Polynomial result(target);
    for (const auto& [m, c] : f.terms()) {
        Polynomial term = Polynomial::constant(Scalar::fromRational(c.value(), target->field()),
                                               target);
        for (std::size_t i = 0; i < src->varCount(); ++i)
            for (int e = 0; e < m.exponent(i); ++e) term = term * images[i];
        result = result + term;
    }
    return result;
}

inline Polynomial substitute(const Polynomial& f,
                             const std::map<std::string, Polynomial>& assignments) {
    return substitute(f, assignments, f.ring());
}

/// All monomials of the given total degree, in no particular order.
inline std::vector<Monomial> monomialsOfDegree(std::size_t nvars, int degree) {
    std::vector<Monomial> out;
    std::vector<int> e(nvars, 0);
    // lexicographic enumeration of compositions of `degree` into nvars parts
    auto rec = [&](auto&& self, std::size_t i, int remaining) -> void {
        if (i + 1 == nvars) {
            e[i] = remaining;
            out.push_back(Monomial(e));
            return;
        }
        for (int v = remaining; v >= 0; --v) {
            e[i] = v;
            self(self, i + 1, remaining - v);
        }
        e[i] = 0;
    };
    rec(rec, 0, degree);
    return out;
}

/// dim_k of the space of degree-d forms in n variables.
inline long dimFormSpace(std::size_t nvars, int degree) {
    // C(degree + nvars - 1, nvars - 1)
    long r = 1;
    for (std::size_t i = 1; i < nvars; ++i) {
        r = r * (degree + static_cast<long>(i));
        r /= static_cast<long>(i);
    }
    return r;
}

} // namespace hilb10
