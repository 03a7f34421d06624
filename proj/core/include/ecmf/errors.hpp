#pragma once

#include <stdexcept>
#include <string>

namespace ecmf {

// Domain errors: the input is outside an operation's contract. The CLI maps
// these to exit code 2, anything else to a hard failure.
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

struct SingularCurve : DomainError {
    SingularCurve() : DomainError("singular curve: discriminant is zero") {}
};

struct NonPrimeModulus : DomainError {
    explicit NonPrimeModulus(const std::string& what) : DomainError(what) {}
};

struct UnsupportedPrime : DomainError {
    explicit UnsupportedPrime(const std::string& what) : DomainError(what) {}
};

struct NonIntegralModel : DomainError {
    explicit NonIntegralModel(const std::string& what) : DomainError(what) {}
};

struct UnsupportedAdditiveSmallPrime : DomainError {
    explicit UnsupportedAdditiveSmallPrime(const std::string& what) : DomainError(what) {}
};

struct NotAFermatTriple : DomainError {
    explicit NotAFermatTriple(const std::string& what) : DomainError(what) {}
};

struct NotCoprime : DomainError {
    explicit NotCoprime(const std::string& what) : DomainError(what) {}
};

struct NearPole : DomainError {
    explicit NearPole(const std::string& what) : DomainError(what) {}
};

struct InsufficientPrecision : DomainError {
    InsufficientPrecision(const std::string& what, long required)
        : DomainError(what), required_prec(required) {}
    long required_prec;
};

struct FactorizationLimit : DomainError {
    explicit FactorizationLimit(const std::string& what) : DomainError(what) {}
};

// Internal errors: an implementation invariant failed, never an input problem.
struct FormulaViolation : std::logic_error {
    explicit FormulaViolation(const std::string& what) : std::logic_error(what) {}
};

struct InternalInconsistency : std::logic_error {
    explicit InternalInconsistency(const std::string& what) : std::logic_error(what) {}
};

} // namespace ecmf
