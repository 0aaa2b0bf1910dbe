#pragma once

#include <stdexcept>
#include <string>

namespace homconf {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class AlphabetMismatch : public Error {
 public:
  AlphabetMismatch() : Error("polynomials are over different alphabets") {}
};

class MissingAssignment : public Error {
 public:
  explicit MissingAssignment(const std::string& var)
      : Error("no value assigned to variable " + var) {}
};

class InvalidSubstitution : public Error {
 public:
  using Error::Error;
};

class SingularMatrix : public Error {
 public:
  SingularMatrix() : Error("matrix determinant is the zero polynomial") {}
};

class NoPolynomialSolution : public Error {
 public:
  NoPolynomialSolution() : Error("solution has a non-polynomial entry") {}
};

class RankMismatch : public Error {
 public:
  using Error::Error;
};

class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

class UnknownParameter : public Error {
 public:
  using Error::Error;
};

class ParamCollision : public Error {
 public:
  using Error::Error;
};

class NotCertified : public Error {
 public:
  using Error::Error;
};

class NotInducible : public Error {
 public:
  using Error::Error;
};

class ConstructionInconsistent : public Error {
 public:
  using Error::Error;
};

class SideConditionsFail : public Error {
 public:
  using Error::Error;
};

class TwistFixpointViolated : public Error {
 public:
  TwistFixpointViolated() : Error("alpha tensor alpha does not fix r") {}
};

/// Syntax or resolution error in a polynomial or definition file.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line, int column)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace homconf
