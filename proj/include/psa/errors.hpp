#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace psa {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed polynomial text. `position` is a 0-based character offset.
class ParseError : public Error {
public:
  ParseError(std::string message, std::size_t position, std::string token)
      : Error(std::move(message)), position_(position), token_(std::move(token)) {}

  std::size_t position() const noexcept { return position_; }
  const std::string& token() const noexcept { return token_; }

private:
  std::size_t position_;
  std::string token_;
};

/// Violated precondition or type invariant (arity, context, index, ring kind).
class DomainError : public Error {
public:
  using Error::Error;
};

/// The question is well posed but outside what the certified algorithms decide.
class UnsupportedError : public Error {
public:
  using Error::Error;
};

} // namespace psa
