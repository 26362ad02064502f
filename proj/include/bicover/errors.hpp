#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bicover {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Input text did not match the expected JSON shape.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line = 0, std::size_t column = 0)
        : Error(line ? what + " (line " + std::to_string(line) + ", column " + std::to_string(column) + ")"
                     : what),
          line_(line), column_(column) {}
    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

class RangeError : public Error {
public:
    using Error::Error;
};

class OverlapError : public Error {
public:
    using Error::Error;
};

class SizeLimitExceeded : public Error {
public:
    using Error::Error;
};

class CapExceeded : public Error {
public:
    using Error::Error;
};

class FieldError : public Error {
public:
    using Error::Error;
};

class TargetUnreached : public Error {
public:
    TargetUnreached(std::size_t achieved, std::size_t target)
        : Error("target of " + std::to_string(target) + " codewords unreached; full scan kept " +
                std::to_string(achieved)),
          achieved_(achieved) {}
    std::size_t achieved() const noexcept { return achieved_; }

private:
    std::size_t achieved_;
};

class NoConstruction : public Error {
public:
    using Error::Error;
};

class NotEnoughCodewords : public Error {
public:
    using Error::Error;
};

class GroundSetMismatch : public Error {
public:
    using Error::Error;
};

class ImproperColoring : public Error {
public:
    using Error::Error;
};

class DomainError : public Error {
public:
    using Error::Error;
};

class InvalidCovering : public Error {
public:
    using Error::Error;
};

class BudgetExhausted : public Error {
public:
    using Error::Error;
};

} // namespace bicover
