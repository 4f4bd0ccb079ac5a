#pragma once

#include <stdexcept>
#include <string>

namespace wallcross {

// Base of every error raised by the library. The CLI maps these to exit
// status 3 (domain error), except SyntaxError which is a usage error.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define WALLCROSS_ERROR(Name)                                                                                          \
    class Name : public Error {                                                                                        \
    public:                                                                                                            \
        using Error::Error;                                                                                            \
    }

WALLCROSS_ERROR(ZeroConstantTerm);
WALLCROSS_ERROR(DimensionMismatch);
WALLCROSS_ERROR(UnknownGenerator);
WALLCROSS_ERROR(IndexOutOfRange);
WALLCROSS_ERROR(Unsupported);
WALLCROSS_ERROR(InvalidModel);
WALLCROSS_ERROR(InvalidPlan);
WALLCROSS_ERROR(NotUnimodular);
WALLCROSS_ERROR(EmptyStage);
WALLCROSS_ERROR(UnknownFixedPoint);
WALLCROSS_ERROR(NoRootData);
WALLCROSS_ERROR(NotRegular);
WALLCROSS_ERROR(InvalidArgument);
WALLCROSS_ERROR(FileError);

#undef WALLCROSS_ERROR

// Position-annotated parse failure (1-based line and column).
class SyntaxError : public Error {
public:
    SyntaxError(const std::string &message, std::size_t line, std::size_t column)
        : Error("syntax error at " + std::to_string(line) + ":" + std::to_string(column) + ": " + message),
          line_(line), column_(column)
    {
    }

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

} // namespace wallcross
