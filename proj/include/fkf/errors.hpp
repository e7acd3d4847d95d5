#pragma once

#include <stdexcept>
#include <string>

namespace fkf {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DivisionByZeroError : Error {
    DivisionByZeroError() : Error("division by zero in Q(i)") {}
};

// Creating h_j with j beyond the configured tower bound.
struct TowerBoundError : Error {
    explicit TowerBoundError(int j, int bound)
        : Error("tower bound exceeded: needs h_" + std::to_string(j) +
                " but max index is " + std::to_string(bound)) {}
};

// to_balanced: monomials disagree on the residual q-power.
struct MixedPrefactorError : Error {
    using Error::Error;
};

// to_balanced: an hbar3 power cannot be paired into r^2 = h3*hbar3.
struct StrayConjugateError : Error {
    using Error::Error;
};

// d_xibar (and the Jacobi operators) reject hbar3-bearing input.
struct ConjugateInputError : Error {
    using Error::Error;
};

// A 2x2 constraint solve whose determinant is not an invertible monomial.
struct SingularSolveError : Error {
    using Error::Error;
};

// Two computation routes for the same coefficient disagree.
struct CrossCheckError : Error {
    using Error::Error;
};

struct EngineError : Error {
    using Error::Error;
};

struct RangeError : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

} // namespace fkf
