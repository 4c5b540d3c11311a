#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cfx {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
public:
    DivisionByZero() : Error("division by zero") {}
};

/// Raised by exact_div when the divisor does not divide the dividend.
class NonDivisible : public Error {
public:
    using Error::Error;
};

class InvalidArgument : public Error {
public:
    using Error::Error;
};

class IndexOutOfRange : public Error {
public:
    using Error::Error;
};

/// A convergent denominator Q_k vanished where a finite value was required.
class ZeroDenominatorConvergent : public Error {
public:
    explicit ZeroDenominatorConvergent(std::size_t index)
        : Error("convergent denominator Q_" + std::to_string(index) + " is zero"), index_(index) {}

    std::size_t index() const noexcept { return index_; }

private:
    std::size_t index_;
};

/// A continued fraction could not be read as a regular one.
class NotRegular : public Error {
public:
    NotRegular(std::size_t index, const std::string& why)
        : Error("not a regular continued fraction at index " + std::to_string(index) + ": " + why),
          index_(index) {}

    std::size_t index() const noexcept { return index_; }

private:
    std::size_t index_;
};

class PreconditionViolated : public Error {
public:
    using Error::Error;
};

/// An integer grew beyond the configured bit-size budget.
class BudgetExceeded : public Error {
public:
    using Error::Error;
};

class PrefixTooShort : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

}  // namespace cfx
