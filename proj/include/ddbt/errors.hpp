#pragma once

#include <stdexcept>
#include <string>

namespace ddbt {

// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

class NotSymmetric : public Error {
public:
    using Error::Error;
};

class SingularBlock : public Error {
public:
    using Error::Error;
};

class NotPSD : public Error {
public:
    using Error::Error;
};

class NotPD : public Error {
public:
    using Error::Error;
};

class SingularPsi : public Error {
public:
    using Error::Error;
};

class RegularityFailure : public Error {
public:
    using Error::Error;
};

class RankDeficient : public Error {
public:
    using Error::Error;
};

class NotAMember : public Error {
public:
    using Error::Error;
};

class LiftDegenerate : public Error {
public:
    using Error::Error;
};

class Unstable : public Error {
public:
    using Error::Error;
};

class InvalidConfig : public Error {
public:
    using Error::Error;
};

// A precondition of a pipeline stage (Slater, rank, regularity) does not hold.
class PreconditionFailure : public Error {
public:
    using Error::Error;
};

// A semidefinite program has no strictly feasible point: a valid negative answer.
class Infeasible : public Error {
public:
    using Error::Error;
};

class SolverError : public Error {
public:
    SolverError(const std::string& what, std::string status)
        : Error(what + " (status: " + status + ")"), status_(std::move(status)) {}
    const std::string& status() const { return status_; }

private:
    std::string status_;
};

// Truncation order does not sit on a multiplicity boundary.
class MultiplicitySplit : public Error {
public:
    MultiplicitySplit(int requested, int lower, int upper)
        : Error("order " + std::to_string(requested) + " splits a Hankel singular value group; "
                "nearest admissible orders are " + std::to_string(lower) + " and " +
                std::to_string(upper)),
          requested(requested), lower(lower), upper(upper) {}
    int requested, lower, upper;
};

}  // namespace ddbt
