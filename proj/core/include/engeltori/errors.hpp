#pragma once

#include <stdexcept>
#include <string>

namespace engeltori {

// Error taxonomy shared across the library.
//
// Validation errors mean the input itself is malformed or violates an
// operation precondition. Hypothesis errors mean the input is well-formed but
// the mathematical hypotheses of the requested computation fail, so no
// conclusion is available. The CLI maps the two kinds to distinct exit codes.
enum class ErrorKind { Validation, Hypothesis, Cancelled };

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

// Malformed or inconsistent input (bad JSON, invalid word, shape errors, ...).
class InvalidInputError : public Error {
public:
    explicit InvalidInputError(const std::string& what)
        : Error(ErrorKind::Validation, what) {}
};

// A closure/front traced more than one component where a knot is required.
class MultiComponentError : public Error {
public:
    explicit MultiComponentError(const std::string& what)
        : Error(ErrorKind::Validation, what) {}
};

// Boundary maps do not compose to zero.
class NotAComplexError : public Error {
public:
    explicit NotAComplexError(const std::string& what)
        : Error(ErrorKind::Validation, what) {}
};

// Matrices in a sequence are not composable (or operand shapes disagree).
class ShapeMismatchError : public Error {
public:
    explicit ShapeMismatchError(const std::string& what)
        : Error(ErrorKind::Validation, what) {}
};

// A vector meant to live in the free part of a group has a nonzero
// coordinate against a torsion summand.
class TorsionCoordinateError : public Error {
public:
    explicit TorsionCoordinateError(const std::string& what)
        : Error(ErrorKind::Validation, what) {}
};

// Two homology classes were compared against different named bases.
class BasisMismatchError : public Error {
public:
    explicit BasisMismatchError(const std::string& what)
        : Error(ErrorKind::Validation, what) {}
};

// Unknown catalog id.
class UnknownIdError : public Error {
public:
    explicit UnknownIdError(const std::string& what)
        : Error(ErrorKind::Validation, what) {}
};

// A computation's standing hypotheses do not hold for this input.
class HypothesisViolatedError : public Error {
public:
    explicit HypothesisViolatedError(const std::string& what)
        : Error(ErrorKind::Hypothesis, what) {}
};

// The graded group handed in is not the homology of a closed oriented
// 3-manifold.
class NotClosed3ManifoldError : public Error {
public:
    explicit NotClosed3ManifoldError(const std::string& what)
        : Error(ErrorKind::Hypothesis, what) {}
};

// A cooperative cancellation callback asked a long-running computation stop.
class CancelledError : public Error {
public:
    explicit CancelledError(const std::string& what)
        : Error(ErrorKind::Cancelled, what) {}
};

}  // namespace engeltori
