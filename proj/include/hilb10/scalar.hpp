#pragma once

#include <gmpxx.h>

#include <string>

#include "errors.hpp"

namespace hilb10 {

/// Coefficient field descriptor: the rationals (prime == 0) or F_p.
struct Field {
    unsigned prime = 0;

    bool isRational() const { return prime == 0; }
    bool operator==(const Field& o) const { return prime == o.prime; }
    bool operator!=(const Field& o) const { return !(*this == o); }

    static Field rationals() { return Field{0}; }
    static Field primeField(unsigned p) {
        if (p < 2) throw InvalidArgumentError("prime field characteristic must be >= 2");
        for (unsigned q = 2; q * q <= p; ++q)
            if (p % q == 0) throw InvalidArgumentError("field characteristic must be prime");
        return Field{p};
    }

    std::string name() const { return prime == 0 ? "q" : "fp " + std::to_string(prime); }
};

/// Exact field element: a rational in lowest terms, or a residue in [0, p).
class Scalar {
public:
    Scalar() : v_(0), p_(0) {}

    static Scalar zero(const Field& f) { return Scalar(mpq_class(0), f.prime); }
    static Scalar one(const Field& f) { return Scalar(mpq_class(1), f.prime); }

    static Scalar fromInt(long n, const Field& f) {
        Scalar s(mpq_class(n), f.prime);
        s.reduce();
        return s;
    }

    static Scalar fromRational(const mpq_class& q, const Field& f) {
        Scalar s(q, f.prime);
        s.reduce();
        return s;
    }

    /// num/den with integer strings; den must be nonzero.
    static Scalar fromFraction(const mpz_class& num, const mpz_class& den, const Field& f) {
        if (den == 0) throw ParseError("zero denominator");
        mpq_class q(num, den);
        q.canonicalize();
        return fromRational(q, f);
    }

    const Field field() const { return Field{p_}; }

    bool isZero() const { return v_ == 0; }
    bool isOne() const { return v_ == 1; }

    Scalar operator+(const Scalar& o) const {
        checkField(o);
        Scalar r(v_ + o.v_, p_);
        r.reduce();
        return r;
    }
    Scalar operator-(const Scalar& o) const {
        checkField(o);
        Scalar r(v_ - o.v_, p_);
        r.reduce();
        return r;
    }
    Scalar operator*(const Scalar& o) const {
        checkField(o);
        Scalar r(v_ * o.v_, p_);
        r.reduce();
        return r;
    }
    Scalar operator/(const Scalar& o) const { return *this * o.inverse(); }
    Scalar operator-() const {
        Scalar r(-v_, p_);
        r.reduce();
        return r;
    }

    Scalar inverse() const {
        if (isZero()) throw InvalidArgumentError("division by zero scalar");
        if (p_ == 0) return Scalar(1 / v_, 0);
        mpz_class inv;
        mpz_class p(p_);
        if (mpz_invert(inv.get_mpz_t(), v_.get_num().get_mpz_t(), p.get_mpz_t()) == 0)
            throw InvalidArgumentError("noninvertible residue");
        Scalar r(mpq_class(inv), p_);
        r.reduce();
        return r;
    }

    bool operator==(const Scalar& o) const { return p_ == o.p_ && v_ == o.v_; }
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    /// Rational value; for F_p the residue in [0, p) as an integer.
    const mpq_class& value() const { return v_; }

    /// Sign of the rational representative (used for printing only).
    int sgn() const { return ::sgn(v_); }

    std::string str() const {
        if (p_ != 0 || v_.get_den() == 1) return v_.get_num().get_str();
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }

private:
    Scalar(const mpq_class& v, unsigned p) : v_(v), p_(p) {}

    void reduce() {
        if (p_ == 0) return;
        // residues are kept as integers in [0, p); rational inputs are mapped
        // through num * den^{-1}
        if (v_.get_den() != 1) {
            Scalar num(mpq_class(v_.get_num()), p_);
            num.reduce();
            Scalar den(mpq_class(v_.get_den()), p_);
            den.reduce();
            v_ = (num * den.inverse()).v_;
            return;
        }
        mpz_class r = v_.get_num() % p_;
        if (r < 0) r += p_;
        v_ = mpq_class(r);
    }

    void checkField(const Scalar& o) const {
        if (p_ != o.p_) throw RingMismatchError("scalars from different fields");
    }

    mpq_class v_;
    unsigned p_;
};

} // namespace hilb10
