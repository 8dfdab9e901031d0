#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace designlattice {

/// Base class for every domain error thrown by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A block family was empty where a nonempty one is required.
class EmptyFamily : public Error {
public:
    using Error::Error;
};

/// The block family is not a t-design; carries two point subsets with
/// different block counts as a counterexample.
class NotADesign : public Error {
public:
    explicit NotADesign(const std::string& what) : Error(what) {}
    NotADesign(const std::string& what, std::vector<int> a, long long ca, std::vector<int> b,
               long long cb)
        : Error(what), subset_a(std::move(a)), subset_b(std::move(b)), count_a(ca), count_b(cb) {}

    std::vector<int> subset_a, subset_b;
    long long count_a = 0, count_b = 0;
};

/// A parameter formula did not evaluate to an exact integer.
class NonIntegral : public Error {
public:
    using Error::Error;
};

/// Derivation was requested at a point lying in no block.
class IsolatedPoint : public Error {
public:
    using Error::Error;
};

/// An identity that must hold for the given structure failed; `which`
/// names the identity.
class AuditFailed : public Error {
public:
    AuditFailed(std::string which_, const std::string& what) : Error(what), which(std::move(which_)) {}
    std::string which;
};

class NotPrime : public Error {
public:
    using Error::Error;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

/// An enumeration would exceed the configured subset budget.
class BudgetExceeded : public Error {
public:
    using Error::Error;
};

/// A construction was requested with parameters outside its hypothesis.
class SpecInvalid : public Error {
public:
    using Error::Error;
};

class NotAZeroSumBlock : public Error {
public:
    using Error::Error;
};

}  // namespace designlattice
