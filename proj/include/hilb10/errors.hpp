#pragma once

#include <stdexcept>
#include <string>

namespace hilb10 {

struct RingMismatchError : std::runtime_error {
    explicit RingMismatchError(const std::string& what) : std::runtime_error(what) {}
};

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

struct NotZeroDimensionalError : std::runtime_error {
    explicit NotZeroDimensionalError(const std::string& what) : std::runtime_error(what) {}
};

struct NotLocalAtOriginError : std::runtime_error {
    explicit NotLocalAtOriginError(const std::string& what) : std::runtime_error(what) {}
};

struct NotHomogeneousError : std::runtime_error {
    explicit NotHomogeneousError(const std::string& what) : std::runtime_error(what) {}
};

struct NotDisjointError : std::runtime_error {
    explicit NotDisjointError(const std::string& what) : std::runtime_error(what) {}
};

struct FieldTooSmallError : std::runtime_error {
    explicit FieldTooSmallError(const std::string& what) : std::runtime_error(what) {}
};

struct InvalidArgumentError : std::runtime_error {
    explicit InvalidArgumentError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace hilb10
