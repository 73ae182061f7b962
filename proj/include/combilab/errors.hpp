#pragma once

#include <stdexcept>
#include <string>

namespace combilab {

// Parameters outside an operation's domain.
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// An enumeration guard was exceeded; `limit` is the guard value in force.
class SizeError : public std::length_error {
public:
    SizeError(const std::string& what, long long limit)
        : std::length_error(what + " (guard " + std::to_string(limit) + ")"), limit_(limit) {}
    long long limit() const noexcept { return limit_; }

private:
    long long limit_;
};

// A value that violates its type's structural invariant.
class InvariantError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// Two independent computations of the same quantity disagreed.
class ConsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

class InjectivityError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class EncodingError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

}  // namespace combilab
