#pragma once

#include <stdexcept>
#include <string>

namespace nilcone {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Mismatched dimensions or otherwise malformed call arguments.
class UsageError : public Error {
public:
    using Error::Error;
};

/// Value outside the mathematical domain of an operation (zero vector, bad n, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// The Jacobi identity fails on basis triple (i, j, k); the residual of the
/// cyclic sum is reported in the message.
class JacobiViolation : public Error {
public:
    JacobiViolation(int i, int j, int k, const std::string& residual)
        : Error("Jacobi identity violated on basis triple (" + std::to_string(i) + ", " +
                std::to_string(j) + ", " + std::to_string(k) + "), residual " + residual),
          i(i), j(j), k(k) {}
    int i, j, k;
};

class IndexOutOfRange : public Error {
public:
    using Error::Error;
};

/// The bracket basis is not nice (multiple targets for a pair, or two
/// overlapping pairs hitting the same basis vector).
class NotNice : public Error {
public:
    using Error::Error;
};

class ZeroBracket : public Error {
public:
    using Error::Error;
};

/// The center is not spanned by basis vectors.
class NonCoordinateCenter : public Error {
public:
    using Error::Error;
};

class InfeasibleInput : public Error {
public:
    using Error::Error;
};

class Unbounded : public Error {
public:
    using Error::Error;
};

class TooManyVars : public Error {
public:
    using Error::Error;
};

class UnknownId : public Error {
public:
    using Error::Error;
};

class BadParameter : public Error {
public:
    using Error::Error;
};

/// The defining system projects to an infeasible system: no positive-trace
/// derivation of the requested kind exists.
class EmptyCone : public Error {
public:
    using Error::Error;
};

}  // namespace nilcone
