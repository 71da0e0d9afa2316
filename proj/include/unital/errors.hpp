#pragma once

#include <stdexcept>
#include <string>

namespace unital {

// Contract violations surface as exceptions; "not N-unital" style outcomes are
// ordinary results (std::optional) and never throw.

struct OrderMismatch : std::invalid_argument {
    explicit OrderMismatch(const std::string& what) : std::invalid_argument(what) {}
};

struct DivisionByZero : std::domain_error {
    explicit DivisionByZero(const std::string& what) : std::domain_error(what) {}
};

struct NotCoprime : std::invalid_argument {
    explicit NotCoprime(const std::string& what) : std::invalid_argument(what) {}
};

struct NotDivisible : std::invalid_argument {
    explicit NotDivisible(const std::string& what) : std::invalid_argument(what) {}
};

struct ZeroPolynomial : std::invalid_argument {
    explicit ZeroPolynomial(const std::string& what) : std::invalid_argument(what) {}
};

struct NotClosed : std::logic_error {
    explicit NotClosed(const std::string& what) : std::logic_error(what) {}
};

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace unital
