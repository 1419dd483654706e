#pragma once

#include <stdexcept>
#include <string>

namespace scs {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define SCS_DEFINE_ERROR(Name)                                   \
  class Name : public Error {                                    \
   public:                                                       \
    explicit Name(const std::string& what) : Error(#Name ": " + what) {} \
  };

SCS_DEFINE_ERROR(NotHermitian)
SCS_DEFINE_ERROR(NoConvergence)
SCS_DEFINE_ERROR(NotPSD)
SCS_DEFINE_ERROR(NotAntiHermitian)
SCS_DEFINE_ERROR(DimensionMismatch)
SCS_DEFINE_ERROR(SpinMismatch)
SCS_DEFINE_ERROR(ThetaNearPi)
SCS_DEFINE_ERROR(DegenerateState)
SCS_DEFINE_ERROR(NotDensityMatrix)
SCS_DEFINE_ERROR(RankExceeded)
SCS_DEFINE_ERROR(InvalidMixture)
SCS_DEFINE_ERROR(InvalidSpin)

#undef SCS_DEFINE_ERROR

}  // namespace scs
