#pragma once

#include <stdexcept>

namespace credence {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed input: bad labels, invalid masses, unparseable files.
class ValidationError : public Error {
public:
    using Error::Error;
};

// The requested operation is undefined: total conflict, conditioning on an
// event of plausibility zero, an allowed set of probability zero.
class ConflictError : public Error {
public:
    using Error::Error;
};

// An enumeration would exceed its configured budget.
class BudgetError : public Error {
public:
    using Error::Error;
};

} // namespace credence
