#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace maniquery {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed WNDB record. Carries the file, 1-based line and byte offset.
class ParseError : public Error {
 public:
  ParseError(std::string file, std::size_t line, std::size_t byte_offset,
             const std::string& what)
      : Error(file + ":" + std::to_string(line) + " (byte " +
              std::to_string(byte_offset) + "): " + what),
        file_(std::move(file)),
        line_(line),
        byte_offset_(byte_offset) {}

  const std::string& file() const noexcept { return file_; }
  std::size_t line() const noexcept { return line_; }
  std::size_t byte_offset() const noexcept { return byte_offset_; }

 private:
  std::string file_;
  std::size_t line_;
  std::size_t byte_offset_;
};

class MissingFile : public Error {
 public:
  using Error::Error;
};

class UnknownSynset : public Error {
 public:
  using Error::Error;
};

/// Two synsets have no connecting path.
class Disconnected : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class EmptyTopic : public Error {
 public:
  using Error::Error;
};

class TooFewRows : public Error {
 public:
  using Error::Error;
};

class InvalidAlpha : public Error {
 public:
  using Error::Error;
};

class EmptyRanking : public Error {
 public:
  using Error::Error;
};

/// Bad configuration detected before any topic is processed.
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace maniquery
