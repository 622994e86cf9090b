#ifndef GBD_ERRORS_HPP
#define GBD_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gbd {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Operands belong to different rings (variable counts differ).
class ContextMismatch : public Error {
public:
    using Error::Error;
};

// Arithmetic between coefficients of different fields (Q vs GF(p), or different p).
class FieldMismatch : public Error {
public:
    using Error::Error;
};

// Exponent arithmetic would exceed the machine-width bound.
class OverflowError : public Error {
public:
    using Error::Error;
};

class InvalidArgument : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(const std::string& msg, int line, int col)
        : Error(msg + " (line " + std::to_string(line) + ", column " + std::to_string(col) + ")"),
          line(line), col(col) {}
    int line;
    int col;
};

// A theory check could not be run because its hypotheses do not hold.
class PreconditionError : public Error {
public:
    using Error::Error;
};

// A theory check ran and its asserted identity failed.
class CheckFailure : public Error {
public:
    using Error::Error;
};

} // namespace gbd

#endif
