#pragma once

#include <stdexcept>
#include <string>

namespace causalorder {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed input text or schema mismatch.
class ParseError : public Error {
public:
    using Error::Error;
};

// A declared system or graph violates one of its invariants.
class ValidationError : public Error {
public:
    using Error::Error;
};

// Unknown ids, overlapping query sets, malformed intervention specs.
class InvalidArgument : public Error {
public:
    using Error::Error;
};

// Well-formed request that the theory or numerics cannot honour:
// not self-contained, not a cluster, incomplete-part target, unsolvable cluster.
class DomainError : public Error {
public:
    using Error::Error;
};

// Exponential routine called above its size cap.
class SizeLimitError : public DomainError {
public:
    using DomainError::DomainError;
};

}  // namespace causalorder
