#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qfa {

/// Base class for every error raised by the workbench.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed amplitude expression. `position()` is the 0-based offset of the
/// offending character.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " at position " + std::to_string(position)), position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// A symbol is not part of the alphabet it was used against.
class AlphabetError : public Error {
public:
    using Error::Error;
};

/// A machine description is structurally broken (unknown state, bad move, ...).
class MachineError : public Error {
public:
    using Error::Error;
};

/// Operator table cannot be completed to a unitary.
class GramError : public Error {
public:
    using Error::Error;
};

/// Automaton file could not be read.
class FormatError : public Error {
public:
    using Error::Error;
};

/// Enumeration budget exhausted.
class BudgetError : public Error {
public:
    using Error::Error;
};

}  // namespace qfa
