#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace frob {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A documented precondition on a parameter (u = 1, u not a p-adic unit, ...) failed.
class InvalidParameter : public Error {
public:
    using Error::Error;
};

class ZeroConstantTerm : public Error {
public:
    ZeroConstantTerm() : Error("series has zero constant term and is not invertible") {}
};

class InvalidIndex : public Error {
public:
    using Error::Error;
};

class LengthMismatch : public Error {
public:
    using Error::Error;
};

class MixedK : public Error {
public:
    using Error::Error;
};

class NonInvertibleDenominator : public Error {
public:
    using Error::Error;
};

/// A configured work cap (term count, index bound) would be exceeded.
class LimitExceeded : public Error {
public:
    using Error::Error;
};

class NoConvergence : public Error {
public:
    using Error::Error;
};

class DivideByZero : public Error {
public:
    using Error::Error;
};

class UnknownFormat : public Error {
public:
    using Error::Error;
};

/// Parse failure. `offset` is the byte offset into the input where parsing stopped.
class SyntaxError : public Error {
public:
    SyntaxError(std::size_t offset, std::vector<std::string> expected, const std::string& detail = {})
        : Error(format(offset, expected, detail)), offset_(offset), expected_(std::move(expected)) {}

    std::size_t offset() const noexcept { return offset_; }
    const std::vector<std::string>& expected() const noexcept { return expected_; }

private:
    static std::string format(std::size_t offset, const std::vector<std::string>& expected,
                              const std::string& detail) {
        std::string msg = "syntax error at byte " + std::to_string(offset);
        if (!detail.empty()) msg += ": " + detail;
        if (!expected.empty()) {
            msg += "; expected one of:";
            for (const auto& e : expected) msg += " " + e;
        }
        return msg;
    }

    std::size_t offset_;
    std::vector<std::string> expected_;
};

}  // namespace frob
