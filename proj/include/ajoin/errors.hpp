#pragma once

#include <stdexcept>
#include <string>

namespace ajoin {

/// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A size or family parameter outside its domain (e.g. cycle:2).
class InvalidParameter : public Error {
 public:
  using Error::Error;
};

/// Malformed graph input: bad edge list, self-loop, edgeless G1 for a join.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// A caller broke a documented contract (non-symmetric matrix, alpha out of range).
class ContractViolation : public Error {
 public:
  using Error::Error;
};

/// A lemma or theorem hypothesis does not hold for the supplied data.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// The request is valid but outside what the closed forms cover.
class UnsupportedClass : public Error {
 public:
  using Error::Error;
};

/// Roots or identities came out inconsistent with their construction.
class NumericInconsistency : public Error {
 public:
  using Error::Error;
};

/// nu sits on (or numerically at) an eigenvalue, so the resolvent is singular.
class PoleError : public Error {
 public:
  PoleError(double nu, double eigenvalue)
      : Error("pole at nu=" + std::to_string(nu) + " (nearest eigenvalue " +
              std::to_string(eigenvalue) + ")"),
        nu_(nu),
        eigenvalue_(eigenvalue) {}

  double nu() const noexcept { return nu_; }
  double eigenvalue() const noexcept { return eigenvalue_; }

 private:
  double nu_;
  double eigenvalue_;
};

}  // namespace ajoin
