#pragma once

#include <stdexcept>
#include <string>

namespace qsv {

/// Base class of every error raised by the engine.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Operand dimensions are incompatible.
class ShapeError : public Error {
public:
    using Error::Error;
};

/// The zero vector was supplied where a state (a ray) is required.
class InvalidStateError : public Error {
public:
    using Error::Error;
};

class SingularMatrixError : public Error {
public:
    using Error::Error;
};

/// A matrix failed the Hermitian or idempotent check.
class InvalidProjectorError : public Error {
public:
    using Error::Error;
};

/// And over non-commuting operands, or Xor over non-orthogonal operands.
class UnsupportedConnectiveError : public Error {
public:
    using Error::Error;
};

class IncompleteAssignmentError : public Error {
public:
    using Error::Error;
};

/// A verification whose projector annihilates the current state.
class ImpossibleOutcomeError : public Error {
public:
    using Error::Error;
};

/// Malformed textual input: scalars, vectors, propositions, fixture files.
class ParseError : public Error {
public:
    using Error::Error;
};

} // namespace qsv
