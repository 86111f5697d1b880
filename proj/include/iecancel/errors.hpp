#pragma once

#include <stdexcept>
#include <string>

namespace iecancel {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A coefficient or an evaluation left the 64-bit signed range.
class OverflowError : public Error {
 public:
  using Error::Error;
};

/// An enumeration or brute-force scan exceeds its configured size cap.
class SizeLimitError : public Error {
 public:
  using Error::Error;
};

/// Two subsets (or a subset and a family) belong to universes of different size.
class UniverseMismatchError : public Error {
 public:
  using Error::Error;
};

/// An argument lies outside the domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// An operation that is only defined for 2-uniform inputs received a hypergraph.
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

/// A supplied broken pair failed the absorption check.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Malformed instance or family input.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace iecancel
