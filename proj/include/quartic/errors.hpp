#pragma once

#include <stdexcept>
#include <string>

namespace quartic {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// The form has D = 0 where a squarefree form is required.
class DegenerateForm : public Error {
 public:
  using Error::Error;
};

/// The input is outside the J = 0 branch the algorithm handles.
class UnsupportedBranch : public Error {
 public:
  using Error::Error;
};

/// An identity that must hold by construction failed.
class Inconsistency : public Error {
 public:
  using Error::Error;
};

class SearchFailure : public Error {
 public:
  using Error::Error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

/// Working precision was too low to certify a numeric invariant.
class PrecisionError : public Error {
 public:
  using Error::Error;
};

class HypothesisNotMet : public Error {
 public:
  using Error::Error;
};

class IncompleteInput : public Error {
 public:
  using Error::Error;
};

/// Malformed command line; the CLI exits with status 2.
class UsageError : public Error {
 public:
  using Error::Error;
};

}  // namespace quartic
