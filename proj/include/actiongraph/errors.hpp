#pragma once

#include <stdexcept>
#include <string>

namespace actiongraph {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// An exact integer division left a nonzero remainder. The closed forms
// always divide exactly, so this indicates an internal bug.
class ExactDivisionError : public Error {
public:
    explicit ExactDivisionError(const std::string& msg) : Error(msg) {}
};

// A full-form materialization would exceed the configured vertex budget.
class BudgetExceededError : public Error {
public:
    explicit BudgetExceededError(const std::string& msg) : Error(msg) {}
};

// The 2/2^l scaling of the doubling rule produced a fractional vertex count.
class IntegralityViolationError : public Error {
public:
    explicit IntegralityViolationError(const std::string& msg) : Error(msg) {}
};

// A graph build was requested past the point where the sequence admits one.
class InadmissibleSequenceError : public Error {
public:
    explicit InadmissibleSequenceError(const std::string& msg) : Error(msg) {}
};

// Unrecognized sequence family or rule name.
class UnknownSequenceError : public Error {
public:
    explicit UnknownSequenceError(const std::string& msg) : Error(msg) {}
};

// A custom value list that cannot be parsed or is too short.
class MalformedCustomError : public Error {
public:
    explicit MalformedCustomError(const std::string& msg) : Error(msg) {}
};

// Structurally invalid graph input (bad JSON document, broken tree shape).
class GraphFormatError : public Error {
public:
    explicit GraphFormatError(const std::string& msg) : Error(msg) {}
};

} // namespace actiongraph
