#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qlogic {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

class NonSquare : public Error {
   public:
    using Error::Error;
};

class NotHermitian : public Error {
   public:
    using Error::Error;
};

class DimMismatch : public Error {
   public:
    using Error::Error;
};

class InvalidProjection : public Error {
   public:
    using Error::Error;
};

class NotNormalized : public Error {
   public:
    using Error::Error;
};

class NonFinite : public Error {
   public:
    using Error::Error;
};

class ConfigError : public Error {
   public:
    using Error::Error;
};

class SetTooLarge : public Error {
   public:
    using Error::Error;
};

/// A QSet exceeded the rank or entry budget.
class RankBudgetExceeded : public Error {
   public:
    using Error::Error;
};

class PreconditionViolated : public Error {
   public:
    using Error::Error;
};

class ChainNotMonotone : public Error {
   public:
    using Error::Error;
};

class NonRealOutput : public Error {
   public:
    using Error::Error;
};

/// Formula-language errors.
class SyntaxError : public Error {
   public:
    SyntaxError(const std::string &message, std::size_t position)
        : Error(message + " at offset " + std::to_string(position)), position_(position) {
    }
    std::size_t position() const noexcept {
        return position_;
    }

   private:
    std::size_t position_;
};

class UnknownName : public Error {
   public:
    using Error::Error;
};

class UnboundVariable : public Error {
   public:
    using Error::Error;
};

/// Raised for unbounded quantifiers, which have no finite truth-value computation.
class UnboundedQuantifier : public Error {
   public:
    using Error::Error;
};

}  // namespace qlogic
