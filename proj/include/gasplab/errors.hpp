#pragma once

#include <stdexcept>
#include <string>

namespace gasplab {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed instance, parameters or file.
class InputError : public Error {
public:
    using Error::Error;
};

class InvalidAssignment : public InputError {
public:
    using InputError::InputError;
};

class InvalidGuess : public InputError {
public:
    using InputError::InputError;
};

// An enumeration cap was hit before the question was decided. Never means "no".
class BudgetExceeded : public Error {
public:
    using Error::Error;
};

class Timeout : public BudgetExceeded {
public:
    using BudgetExceeded::BudgetExceeded;
};

// Graph shape does not satisfy a precondition (cycle where a forest is needed, ...).
class StructureError : public Error {
public:
    using Error::Error;
};

// A solver produced a witness that failed re-verification.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace gasplab
