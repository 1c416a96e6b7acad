#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace svir {

/// Base class for all errors thrown by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Mixing Ramond and Neveu-Schwarz objects, or an index invalid for a family.
class FamilyMismatch : public Error {
public:
    using Error::Error;
};

/// A polynomial operation would exceed the hard degree cap.
class DegreeOverflow : public Error {
public:
    using Error::Error;
};

/// A map was applied to a vector outside its declared domain.
class NotInSubmodule : public Error {
public:
    using Error::Error;
};

/// Evaluation point has q0 = 0, which is excluded (lambda must be invertible).
class ZeroQ : public Error {
public:
    using Error::Error;
};

/// Expression text does not match the grammar.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " (at column " + std::to_string(position + 1) + ")"),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

}  // namespace svir
