#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace solvcert {

// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Shape mismatch between operands (matrix sizes, vector lengths, ...).
class DimensionError : public Error {
 public:
  explicit DimensionError(const std::string& what) : Error(what) {}
};

// Operation applied to an input outside its domain (zero polynomial, ...).
class InvalidInput : public Error {
 public:
  explicit InvalidInput(const std::string& what) : Error(what) {}
};

// Structure constants fail the Jacobi identity on a basis triple.
class JacobiViolation : public Error {
 public:
  JacobiViolation(int i, int j, int k, std::string residual)
      : Error("Jacobi identity fails on basis triple (" + std::to_string(i) +
              ", " + std::to_string(j) + ", " + std::to_string(k) +
              "), cyclic sum = " + residual),
        i(i), j(j), k(k), residual(std::move(residual)) {}
  int i, j, k;
  std::string residual;
};

class NotAnIdeal : public Error {
 public:
  explicit NotAnIdeal(const std::string& what) : Error(what) {}
};

class NotADerivation : public Error {
 public:
  NotADerivation(int which, int a, int b)
      : Error("matrix " + std::to_string(which) +
              " violates the Leibniz rule on basis pair (" + std::to_string(a) +
              ", " + std::to_string(b) + ")"),
        which(which), a(a), b(b) {}
  int which, a, b;
};

class NonCommutingDerivations : public Error {
 public:
  NonCommutingDerivations(int j, int k)
      : Error("derivations " + std::to_string(j) + " and " + std::to_string(k) +
              " do not commute"),
        j(j), k(k) {}
  int j, k;
};

class NotCompletelySolvable : public Error {
 public:
  explicit NotCompletelySolvable(const std::string& what) : Error(what) {}
};

// Raised by exact-mode constructions when progress requires an eigenvalue
// that is real but not rational.  `poly_coeffs` holds the offending
// characteristic factor, lowest degree first, as rational strings.
class NeedsIrrationalEigenvalue : public Error {
 public:
  explicit NeedsIrrationalEigenvalue(std::vector<std::string> poly_coeffs)
      : Error("no rational eigenvalue at this level; eigenvalues are irrational"),
        poly_coeffs(std::move(poly_coeffs)) {}
  std::vector<std::string> poly_coeffs;
};

class NotTriangular : public Error {
 public:
  explicit NotTriangular(const std::string& what) : Error(what) {}
};

class NonPositiveDiagonal : public Error {
 public:
  explicit NonPositiveDiagonal(const std::string& what) : Error(what) {}
};

// Completely solvable input outside the constructive embedding tiers.
class UnsupportedAdoCase : public Error {
 public:
  explicit UnsupportedAdoCase(const std::string& what) : Error(what) {}
};

// Representation would exceed the configured size bound.
class SizeError : public Error {
 public:
  explicit SizeError(const std::string& what) : Error(what) {}
};

// A group presentation fails one of the validation rules.
class InvalidPresentation : public Error {
 public:
  InvalidPresentation(std::string rule, const std::string& what)
      : Error("invalid presentation [" + rule + "]: " + what),
        rule(std::move(rule)) {}
  std::string rule;
};

// Malformed input file; `where` points at the offending field.
class ParseError : public Error {
 public:
  ParseError(std::string where, const std::string& what)
      : Error("parse error at " + where + ": " + what), where(std::move(where)) {}
  std::string where;
};

}  // namespace solvcert
