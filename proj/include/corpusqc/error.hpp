#pragma once

#include <stdexcept>
#include <string>

namespace corpusqc {

// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

class EncodingError : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

class PatternError : public Error {
 public:
  using Error::Error;
};

class FormatError : public Error {
 public:
  using Error::Error;
};

// Precondition violations on data (missing verdicts, duplicate ids, ...).
class DataError : public Error {
 public:
  using Error::Error;
};

class MissingVerdict : public DataError {
 public:
  using DataError::DataError;
};

class DuplicateId : public DataError {
 public:
  using DataError::DataError;
};

class MismatchedIds : public DataError {
 public:
  using DataError::DataError;
};

class DegenerateTest : public DataError {
 public:
  using DataError::DataError;
};

class UnsupportedFormat : public Error {
 public:
  using Error::Error;
};

}  // namespace corpusqc
