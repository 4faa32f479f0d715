#pragma once

#include <stdexcept>
#include <string>

namespace privsim {

// Base class for all library-thrown failures.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid configuration: bad network/scenario/bot parameters, duplicate
// attribute keywords, overlapping match-term sets, and similar. Messages
// include the offending field path where one exists.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// An operation was called with arguments that violate its contract
// (negative counts, unknown entities, tick mismatches, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

// A like was recorded for a page or post the subject already likes.
class DuplicateInteractionError : public Error {
 public:
  using Error::Error;
};

// A keyword was not found in the keyword graph.
class UnknownKeywordError : public Error {
 public:
  using Error::Error;
};

// Theoretical privacy is undefined when the account has no likes (T = 0).
class UndefinedPrivacyError : public Error {
 public:
  using Error::Error;
};

// Malformed persisted data (event log, records file). Carries the
// 1-based line number when known.
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what) : Error(what), line_(0) {}
  ParseError(const std::string& what, int line)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace privsim
