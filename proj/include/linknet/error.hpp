#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace linknet {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two networks (or a network and a vector) do not share the required mode.
class IncompatibleModes : public Error {
 public:
  using Error::Error;
};

/// A vector loaded against a network does not match the node set size.
class CompatibilityError : public IncompatibleModes {
 public:
  using IncompatibleModes::IncompatibleModes;
};

/// The pre-flight cost estimate of a product exceeded the explosion guard.
class ExplosionAborted : public Error {
 public:
  ExplosionAborted(std::uint64_t predicted, std::uint64_t limit);

  std::uint64_t predicted() const noexcept { return predicted_; }
  std::uint64_t limit() const noexcept { return limit_; }

 private:
  std::uint64_t predicted_;
  std::uint64_t limit_;
};

class NotOneMode : public Error {
 public:
  using Error::Error;
};

class NotSymmetric : public Error {
 public:
  using Error::Error;
};

class NotBinary : public Error {
 public:
  using Error::Error;
};

/// A value lies outside the domain of a transform (e.g. log of zero).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Malformed Pajek input. `line()` is 1-based.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what);

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// The `*vertices` header is missing, malformed or inconsistent.
class BadVertexCount : public ParseError {
 public:
  using ParseError::ParseError;
};

/// A node index outside its node set. `line()` is 0 when not raised by a parser.
class IndexOutOfRange : public Error {
 public:
  explicit IndexOutOfRange(const std::string& what, std::size_t line = 0);

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace linknet
