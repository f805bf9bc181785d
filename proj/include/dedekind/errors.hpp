#pragma once

#include <stdexcept>
#include <string>

namespace dedekind {

/// Raised when a caller-supplied parameter violates an identity's hypothesis
/// (coprimality, parity, convergence domain). The CLI maps these to exit 2.
class PreconditionError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class NotCoprime : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

class PeriodMismatch : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

class ParityViolation : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

class PoleAtIntegerMultiple : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

class PoleAtHalfPeriod : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

class ConvergenceDomain : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

class NonPositiveArgument : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

class OutOfRange : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

class NotOdd : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

/// Brute-force enumeration would exceed the configured term budget.
class WorkLimitExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace dedekind
