#pragma once

#include <stdexcept>
#include <string>

namespace skewpbw {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct FieldMismatch : Error {
    using Error::Error;
};

struct DivisionByZero : Error {
    using Error::Error;
};

struct BudgetExceeded : Error {
    using Error::Error;
};

struct ResourceLimit : Error {
    using Error::Error;
};

struct ParseError : Error {
    ParseError(std::string msg, int line, int col)
        : Error("parse error at " + std::to_string(line) + ":" + std::to_string(col) + ": " + msg),
          line(line), col(col) {}
    int line;
    int col;
};

struct InadmissiblePresentation : Error {
    using Error::Error;
};

struct UnknownAlgebra : Error {
    using Error::Error;
};

struct BadParameter : Error {
    using Error::Error;
};

struct UnknownLemma : Error {
    using Error::Error;
};

struct BadArgument : Error {
    using Error::Error;
};

} // namespace skewpbw
