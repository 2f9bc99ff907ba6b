#pragma once

#include <stdexcept>
#include <string>

namespace heavy {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the domain of the operation (non-binary letter,
/// negative index into a one-sided sequence, alpha outside [0,1], ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// An index or length is out of range for the word or window it addresses.
class BoundsError : public Error {
 public:
  using Error::Error;
};

/// The average weight of the empty word was requested.
class UndefinedAverageError : public Error {
 public:
  using Error::Error;
};

/// A documented precondition of a checking routine does not hold.
class ContractError : public Error {
 public:
  using Error::Error;
};

class NotAFixedPointError : public Error {
 public:
  using Error::Error;
};

/// The word does not have the 1^{n_0}0 1^{n_1}0 ... run structure.
class NotDerivableError : public Error {
 public:
  using Error::Error;
};

/// An enumeration or window-growth budget was exceeded.
class BudgetError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace heavy
