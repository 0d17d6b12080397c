#pragma once

#include <stdexcept>
#include <string>

namespace hecke {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  /// Stable machine-readable name, e.g. "NonDivisible".
  virtual const char* reason() const noexcept = 0;
};

#define HECKE_DEFINE_ERROR(Name)                                   \
  class Name : public Error {                                      \
   public:                                                         \
    explicit Name(const std::string& what) : Error(what) {}        \
    const char* reason() const noexcept override { return #Name; } \
  }

// A remainder survived an exact division. Upstream this always means an
// algebraic identity did not hold.
HECKE_DEFINE_ERROR(NonDivisible);
HECKE_DEFINE_ERROR(DivisionByZero);
HECKE_DEFINE_ERROR(NegativeIndex);
HECKE_DEFINE_ERROR(RankTooSmall);
HECKE_DEFINE_ERROR(DimensionMismatch);
HECKE_DEFINE_ERROR(NotInChamberInterior);
HECKE_DEFINE_ERROR(SingularBasis);
HECKE_DEFINE_ERROR(OutOfRange);
HECKE_DEFINE_ERROR(OutOfTruncation);
HECKE_DEFINE_ERROR(ResourceLimit);

#undef HECKE_DEFINE_ERROR

}  // namespace hecke
