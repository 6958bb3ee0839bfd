#pragma once

#include <stdexcept>
#include <string>

namespace chowdefect {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live in different rings, or a ring is unsuitable for the operation.
class ContextError : public Error {
 public:
  using Error::Error;
};

class SubstitutionError : public Error {
 public:
  using Error::Error;
};

/// Malformed polynomial literal.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Malformed series expression (textual or structural).
class ExpressionError : public Error {
 public:
  using Error::Error;
};

class GradingError : public Error {
 public:
  using Error::Error;
};

/// A computation would exceed the desk-scale limits.
class SizeError : public Error {
 public:
  using Error::Error;
};

/// Ideal(Im) is not contained in Ker: the case data is inconsistent.
class ContainmentError : public Error {
 public:
  using Error::Error;
};

/// The staircase and linear-algebra Hilbert functions disagree.
class MethodDisagreement : public Error {
 public:
  using Error::Error;
};

class CatalogError : public Error {
 public:
  using Error::Error;
};

}  // namespace chowdefect
