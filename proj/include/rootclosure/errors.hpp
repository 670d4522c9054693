#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rootclosure {

// Base of every error the library raises on purpose.
class AlgebraError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operands live in structurally different rings.
class MixedRingError : public AlgebraError {
 public:
  MixedRingError() : AlgebraError("operands belong to different rings") {}
  explicit MixedRingError(const std::string& what) : AlgebraError(what) {}
};

class NoEmbeddingError : public AlgebraError {
 public:
  using AlgebraError::AlgebraError;
};

class ZeroPolynomialError : public AlgebraError {
 public:
  ZeroPolynomialError() : AlgebraError("degree of the zero polynomial is undefined") {}
};

class BudgetExceededError : public AlgebraError {
 public:
  using AlgebraError::AlgebraError;
};

class NotEnumerableError : public AlgebraError {
 public:
  using AlgebraError::AlgebraError;
};

class NotMonomialError : public AlgebraError {
 public:
  NotMonomialError() : AlgebraError("ideal is not a monomial ideal of a polynomial ring") {}
};

class InvalidCertificateError : public AlgebraError {
 public:
  using AlgebraError::AlgebraError;
};

// Raised for a composite modulus or a reducible minimal polynomial.
class InvalidFieldError : public AlgebraError {
 public:
  enum class Reason { NotPrime, Reducible, BadDegree };
  InvalidFieldError(Reason reason, const std::string& what)
      : AlgebraError(what), reason_(reason) {}
  Reason reason() const { return reason_; }

 private:
  Reason reason_;
};

// Script and expression errors carry a 1-based source position.
class ParseError : public AlgebraError {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column,
             std::string token)
      : AlgebraError(format(message, line, column, token)),
        line_(line),
        column_(column),
        token_(std::move(token)) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::string& token() const { return token_; }

 private:
  static std::string format(const std::string& message, std::size_t line,
                            std::size_t column, const std::string& token) {
    return std::to_string(line) + ":" + std::to_string(column) + ": " + message +
           (token.empty() ? std::string() : " (at '" + token + "')");
  }

  std::size_t line_;
  std::size_t column_;
  std::string token_;
};

class SyntaxError : public ParseError {
 public:
  using ParseError::ParseError;
};

class UndeclaredNameError : public ParseError {
 public:
  using ParseError::ParseError;
};

class BadWeightError : public ParseError {
 public:
  using ParseError::ParseError;
};

}  // namespace rootclosure
