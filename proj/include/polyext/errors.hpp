#pragma once

#include <stdexcept>
#include <string>

namespace polyext {

// Base class for all errors thrown by this library. Every failure mode the
// public API documents is a subclass, so callers can catch either the broad
// base or the specific condition they care about.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// A matrix/vector index or shape is out of range or inconsistent.
class IndexOutOfRange : public Error {
public:
    using Error::Error;
};

// A parameter value is outside the documented domain of an operation.
class InvalidParameter : public Error {
public:
    using Error::Error;
};

// subquotient_group was called with matrices whose composite Z*B is nonzero.
class CompositionNotZero : public Error {
public:
    using Error::Error;
};

// Two complexes that must share an orientation (e.g. tensor factors) do not.
class OrientationMismatch : public Error {
public:
    using Error::Error;
};

// A family of degreewise matrices fails to commute with the differentials.
class NotAChainMap : public Error {
public:
    using Error::Error;
};

// A purported group action fails associativity/identity/equivariance checks.
class NotAnAction : public Error {
public:
    using Error::Error;
};

// The requested (source, target) functor pair has no implemented method.
class UnsupportedPair : public Error {
public:
    using Error::Error;
};

// The requested functor is outside the domain of the operation.
class UnsupportedFunctor : public Error {
public:
    using Error::Error;
};

// cross_check needs at least two independent methods; the pair has one.
class OnlyOneMethod : public Error {
public:
    using Error::Error;
};

// Two evaluation methods for the same query returned different values.
class CrossCheckMismatch : public Error {
public:
    using Error::Error;
};

// Functor-expression parsing failed; carries position and expectation info.
class ParseError : public Error {
public:
    ParseError(const std::string& msg, std::size_t position)
        : Error(msg), position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

}  // namespace polyext
