#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <vector>

#include "errors.hpp"

namespace hilb10 {

/// Exponent vector with cached total degree.
class Monomial {
public:
    Monomial() = default;

    explicit Monomial(std::vector<int> exponents) : e_(std::move(exponents)) {
        for (int x : e_)
            if (x < 0) throw InvalidArgumentError("negative exponent");
        deg_ = std::accumulate(e_.begin(), e_.end(), 0);
    }

    static Monomial unit(std::size_t nvars) { return Monomial(std::vector<int>(nvars, 0)); }

    static Monomial variable(std::size_t nvars, std::size_t idx, int power = 1) {
        std::vector<int> e(nvars, 0);
        e.at(idx) = power;
        return Monomial(std::move(e));
    }

    std::size_t nvars() const { return e_.size(); }
    int degree() const { return deg_; }
    int exponent(std::size_t i) const { return e_[i]; }
    const std::vector<int>& exponents() const { return e_; }
    bool isUnit() const { return deg_ == 0; }

    Monomial operator*(const Monomial& o) const {
        Monomial r = *this;
        for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
        r.deg_ += o.deg_;
        return r;
    }

    bool divides(const Monomial& o) const {
        if (deg_ > o.deg_) return false;
        for (std::size_t i = 0; i < e_.size(); ++i)
            if (e_[i] > o.e_[i]) return false;
        return true;
    }

    /// this / o; caller must ensure divisibility.
    Monomial operator/(const Monomial& o) const {
        Monomial r = *this;
        for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] -= o.e_[i];
        r.deg_ -= o.deg_;
        return r;
    }

    Monomial lcm(const Monomial& o) const {
        Monomial r = *this;
        r.deg_ = 0;
        for (std::size_t i = 0; i < e_.size(); ++i) {
            r.e_[i] = std::max(e_[i], o.e_[i]);
            r.deg_ += r.e_[i];
        }
        return r;
    }

    bool coprime(const Monomial& o) const {
        for (std::size_t i = 0; i < e_.size(); ++i)
            if (e_[i] > 0 && o.e_[i] > 0) return false;
        return true;
    }

    bool operator==(const Monomial& o) const { return e_ == o.e_; }
    bool operator!=(const Monomial& o) const { return !(*this == o); }

    /// +1 if a > b under graded reverse lexicographic order, -1 if a < b, 0 if equal.
    static int cmpDegRevLex(const Monomial& a, const Monomial& b) {
        if (a.deg_ != b.deg_) return a.deg_ > b.deg_ ? 1 : -1;
        for (std::size_t i = a.e_.size(); i-- > 0;) {
            if (a.e_[i] != b.e_[i]) return a.e_[i] < b.e_[i] ? 1 : -1;
        }
        return 0;
    }

    static int cmpLex(const Monomial& a, const Monomial& b) {
        for (std::size_t i = 0; i < a.e_.size(); ++i)
            if (a.e_[i] != b.e_[i]) return a.e_[i] > b.e_[i] ? 1 : -1;
        return 0;
    }

private:
    std::vector<int> e_;
    int deg_ = 0;
};

/// Canonical term order for polynomial storage and printing: degrevlex descending.
struct MonomialDegRevLexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return Monomial::cmpDegRevLex(a, b) > 0;
    }
};

} // namespace hilb10
