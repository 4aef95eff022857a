#pragma once

#include <stdexcept>
#include <string>

namespace qcent {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Incompatible matrix/vector shapes.
class ShapeError : public Error {
public:
    using Error::Error;
};

// Input outside an operation's domain (non-Hermitian, non-unitary, invalid state, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

class NotTracePreserving : public Error {
public:
    explicit NotTracePreserving(double residual);
    double residual() const { return residual_; }

private:
    double residual_;
};

// The subspace violates the Knill-Laflamme conditions for the channel.
class NotCorrectable : public Error {
public:
    NotCorrectable(double residual, double threshold);
    double residual() const { return residual_; }
    double threshold() const { return threshold_; }

private:
    double residual_;
    double threshold_;
};

// Empty rank-k numerical range: no rank-k code exists.
class NoCode : public Error {
public:
    using Error::Error;
};

class NoFeasiblePartition : public Error {
public:
    using Error::Error;
};

class LambdaOutsideRegion : public Error {
public:
    using Error::Error;
};

class Unsupported : public Error {
public:
    using Error::Error;
};

// Unreadable or malformed input file.
class InputError : public Error {
public:
    using Error::Error;
};

}  // namespace qcent
