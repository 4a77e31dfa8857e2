#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace nilcmetrix {

/// Base class for every error raised by the engine.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text (CoNLL-U rows, bracketed trees, TSV cells).
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Well-formed input that violates a structural invariant.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// A lexical resource could not be read or failed validation.
class ResourceError : public Error {
 public:
  ResourceError(std::string file, const std::string& what)
      : Error(file + ": " + what), file_(std::move(file)) {}

  const std::string& file() const noexcept { return file_; }

 private:
  std::string file_;
};

}  // namespace nilcmetrix
