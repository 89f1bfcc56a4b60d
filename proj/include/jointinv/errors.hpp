#ifndef JOINTINV_ERRORS_HPP
#define JOINTINV_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace jointinv {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: wrong arity, bad index tuple, unparsable number.
class InputError : public Error {
 public:
  using Error::Error;
};

/// A request exceeding the desk-scale limits of an operation.
class CostGuardError : public InputError {
 public:
  using InputError::InputError;
};

/// A configuration fails a genericity predicate. `predicate()` names it.
class GenericityError : public Error {
 public:
  explicit GenericityError(std::string predicate)
      : Error("non-generic configuration: " + predicate),
        predicate_(std::move(predicate)) {}

  const std::string& predicate() const noexcept { return predicate_; }

 private:
  std::string predicate_;
};

class NotEquivalentError : public Error {
 public:
  using Error::Error;
};

/// Fewer than 2n points: the stabilizer is positive-dimensional.
class UnderdeterminedError : public Error {
 public:
  using Error::Error;
};

/// Vanishing denominator in a floating-point discretization formula.
class DegenerateError : public Error {
 public:
  using Error::Error;
};

}  // namespace jointinv

#endif  // JOINTINV_ERRORS_HPP
