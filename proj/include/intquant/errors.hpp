#ifndef INTQUANT_ERRORS_HPP
#define INTQUANT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace intquant {

// Base class for every error thrown by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Invalid constructor parameter or option value (alpha <= 0, sigma <= 0, ...).
class ParameterError : public Error {
public:
    using Error::Error;
};

// Argument outside the mathematical domain of an operation (p not in (0,1), ...).
class DomainError : public Error {
public:
    using Error::Error;
};

// Malformed input data: unreadable file, non-numeric CSV cell, empty sample.
class DataError : public Error {
public:
    using Error::Error;
};

// A required moment does not exist for the given model.
class MomentError : public Error {
public:
    using Error::Error;
};

// Closed-form expression undefined at the requested parameter (alpha2 == 1).
class SingularityError : public Error {
public:
    using Error::Error;
};

// A measure places mass where the integrated risk functional is infinite.
class FinitenessError : public Error {
public:
    using Error::Error;
};

// Malformed specification string (distribution, measure or grid syntax).
class ParseError : public Error {
public:
    using Error::Error;
};

// Iterative numeric routine failed to converge or bracket.
class NumericError : public Error {
public:
    using Error::Error;
};

}  // namespace intquant

#endif
