#pragma once

#include <stdexcept>
#include <string>

namespace g2schur {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Arithmetic contract violations: division by zero, singular series, mixed truncations.
class ArithmeticError : public Error {
 public:
  using Error::Error;
};

// Malformed input files, rationals, configuration.
class FormatError : public Error {
 public:
  using Error::Error;
};

// A check of a proved statement failed. Always carries a witness description.
class FalsificationError : public Error {
 public:
  FalsificationError(const std::string& what, std::string witness)
      : Error(what + " [witness: " + witness + "]"), witness_(std::move(witness)) {}
  const std::string& witness() const { return witness_; }

 private:
  std::string witness_;
};

}  // namespace g2schur
