#pragma once

#include <stdexcept>
#include <string>

namespace spinkin {

// Base for every error raised by the library. Callers that only care about
// "the inputs were unusable" can catch this.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Non-square operand or incompatible dimensions.
class DimensionError : public Error {
 public:
  using Error::Error;
};

// Input outside the mathematical domain (m <= 0, zero spinor, NaN entries).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Rapidity cap exceeded or non-finite result after scaling.
class OverflowError : public Error {
 public:
  using Error::Error;
};

class OffShellError : public Error {
 public:
  using Error::Error;
};

class DegenerateBasisError : public Error {
 public:
  using Error::Error;
};

class RankDeficientError : public Error {
 public:
  using Error::Error;
};

// The rest basis does not split into Hermitian-orthogonal u/v subspaces.
class NonHermitianBasisError : public Error {
 public:
  using Error::Error;
};

}  // namespace spinkin
