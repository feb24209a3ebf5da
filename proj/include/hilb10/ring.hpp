#pragma once

#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "errors.hpp"
#include "scalar.hpp"

namespace hilb10 {

class RingContext;
using RingPtr = std::shared_ptr<const RingContext>;

/// Ambient polynomial ring: ordered variable names over an exact field.
class RingContext {
public:
    static RingPtr make(std::vector<std::string> variables, Field field = Field::rationals()) {
        return RingPtr(new RingContext(std::move(variables), field));
    }

    /// k[<stem>1, ..., <stem>n]
    static RingPtr make(const std::string& stem, std::size_t n, Field field = Field::rationals()) {
        std::vector<std::string> vars;
        vars.reserve(n);
        for (std::size_t i = 1; i <= n; ++i) vars.push_back(stem + std::to_string(i));
        return make(std::move(vars), field);
    }

    std::size_t varCount() const { return vars_.size(); }
    const std::vector<std::string>& variables() const { return vars_; }
    const std::string& variable(std::size_t i) const { return vars_.at(i); }
    const Field& field() const { return field_; }

    std::optional<std::size_t> indexOf(const std::string& name) const {
        auto it = index_.find(name);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    bool sameAs(const RingContext& o) const { return vars_ == o.vars_ && field_ == o.field_; }

    std::string str() const {
        std::string s = field_.isRational() ? "Q[" : "F" + std::to_string(field_.prime) + "[";
        for (std::size_t i = 0; i < vars_.size(); ++i) {
            if (i) s += ",";
            s += vars_[i];
        }
        return s + "]";
    }

private:
    RingContext(std::vector<std::string> variables, Field field)
        : vars_(std::move(variables)), field_(field) {
        if (vars_.empty()) throw InvalidArgumentError("ring needs at least one variable");
        for (std::size_t i = 0; i < vars_.size(); ++i) {
            if (vars_[i].empty()) throw InvalidArgumentError("empty variable name");
            if (!index_.emplace(vars_[i], i).second)
                throw InvalidArgumentError("duplicate variable name: " + vars_[i]);
        }
    }

    std::vector<std::string> vars_;
    Field field_;
    std::unordered_map<std::string, std::size_t> index_;
};

inline void requireSameRing(const RingPtr& a, const RingPtr& b) {
    if (a.get() == b.get()) return;
    if (!a || !b || !a->sameAs(*b)) throw RingMismatchError("operands live in different rings");
}

} // namespace hilb10
