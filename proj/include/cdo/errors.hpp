#pragma once

#include <stdexcept>
#include <string>

namespace cdo {

/// Base of every library error.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent input (CLI exit code 2).
class InputError : public Error {
 public:
  using Error::Error;
};

/// A computed identity did not hold (CLI exit code 1).
class VerificationError : public Error {
 public:
  using Error::Error;
};

class AntisymmetryViolation : public InputError {
 public:
  AntisymmetryViolation(int i, int j, int p)
      : InputError("antisymmetry violated at [" + std::to_string(i) + "," + std::to_string(j) +
                   "] component " + std::to_string(p)),
        i(i), j(j), p(p) {}
  int i, j, p;
};

class JacobiViolation : public InputError {
 public:
  JacobiViolation(int i, int j, int k)
      : InputError("Jacobi identity violated on (" + std::to_string(i) + "," + std::to_string(j) + "," +
                   std::to_string(k) + ")"),
        i(i), j(j), k(k) {}
  int i, j, k;
};

class UnknownAlgebra : public InputError {
 public:
  using InputError::InputError;
};

class NotClosed : public InputError {
 public:
  using InputError::InputError;
};

class NotInvariant : public InputError {
 public:
  using InputError::InputError;
};

class NotSymmetric : public InputError {
 public:
  using InputError::InputError;
};

class AlgebraMismatch : public InputError {
 public:
  using InputError::InputError;
};

class PairingAxiomViolation : public VerificationError {
 public:
  PairingAxiomViolation(int i1, int i2, int i3)
      : VerificationError("pairing compatibility fails on (" + std::to_string(i1) + "," + std::to_string(i2) + "," +
                          std::to_string(i3) + ")"),
        i1(i1), i2(i2), i3(i3) {}
  int i1, i2, i3;
};

class CocycleAxiomViolation : public VerificationError {
 public:
  CocycleAxiomViolation(int i0, int i1, int i2, int i3)
      : VerificationError("cocycle condition fails on (" + std::to_string(i0) + "," + std::to_string(i1) + "," +
                          std::to_string(i2) + "," + std::to_string(i3) + ")"),
        i0(i0), i1(i1), i2(i2), i3(i3) {}
  int i0, i1, i2, i3;
};

class ConventionFailure : public VerificationError {
 public:
  using VerificationError::VerificationError;
};

class SolveFailure : public VerificationError {
 public:
  using VerificationError::VerificationError;
};

class MismatchError : public VerificationError {
 public:
  using VerificationError::VerificationError;
};

class OpeCheckFailure : public VerificationError {
 public:
  using VerificationError::VerificationError;
};

class StabilityViolation : public VerificationError {
 public:
  using VerificationError::VerificationError;
};

class VerificationFailure : public VerificationError {
 public:
  using VerificationError::VerificationError;
};

class TruncationExceeded : public Error {
 public:
  using Error::Error;
};

class DifferentialNotSquareZero : public InputError {
 public:
  using InputError::InputError;
};

class UnsupportedType : public InputError {
 public:
  using InputError::InputError;
};

}  // namespace cdo
