#pragma once

#include <stdexcept>
#include <string>

namespace lsr {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidGraph : public Error {
 public:
  using Error::Error;
};

class DisconnectedGraph : public InvalidGraph {
 public:
  using InvalidGraph::InvalidGraph;
};

class InvalidVertex : public Error {
 public:
  using Error::Error;
};

class InfeasibleParameters : public Error {
 public:
  using Error::Error;
};

/// Exact solvers refuse instances beyond their work budget.
class ExactLimitExceeded : public Error {
 public:
  using Error::Error;
};

class NoSeparatorWithinBudget : public Error {
 public:
  using Error::Error;
};

class RoundBudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// A descent step needed a value that was never queried.
class MissingValue : public Error {
 public:
  using Error::Error;
};

/// No staircase function can produce the given sign history.
class InconsistentHistory : public Error {
 public:
  using Error::Error;
};

class InvalidCover : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace lsr
