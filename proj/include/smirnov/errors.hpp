#pragma once

#include <stdexcept>
#include <string>

namespace smirnov {

// Error taxonomy for the whole library. Everything derives from Error so
// callers (notably the CLI) can catch one type.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidTuple : Error {
    using Error::Error;
};

struct DimensionMismatch : Error {
    using Error::Error;
};

struct CrossSampleTie : Error {
    using Error::Error;
};

struct RangeError : Error {
    using Error::Error;
};

struct NegativeArgument : Error {
    using Error::Error;
};

struct NotAttainable : Error {
    using Error::Error;
};

struct CellMismatch : Error {
    using Error::Error;
};

struct RowCollision : Error {
    using Error::Error;
};

struct BudgetExceeded : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

struct IoError : Error {
    using Error::Error;
};

} // namespace smirnov
