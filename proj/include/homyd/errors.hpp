#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace homyd {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Scalar-level problems: division by zero, malformed literal, bad modulus.
class DomainError : public Error {
   public:
    using Error::Error;
};

/// Tensor shapes that cannot be composed or compared.
class ShapeError : public Error {
   public:
    using Error::Error;
};

class NotInvertible : public Error {
   public:
    NotInvertible(const std::string& what, std::size_t rank) : Error(what + " is not invertible (rank " + std::to_string(rank) + ")"), rank_(rank) {}
    std::size_t rank() const { return rank_; }

   private:
    std::size_t rank_;
};

/// A constructor's input failed a verified hypothesis.
class PreconditionError : public Error {
   public:
    using Error::Error;
};

/// A checker was asked about an object outside its category.
class Inapplicable : public Error {
   public:
    using Error::Error;
};

/// Two structures that must share a base do not.
class BaseMismatch : public Error {
   public:
    using Error::Error;
};

}  // namespace homyd
