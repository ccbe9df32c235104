#ifndef WITKIT_ERRORS_HPP
#define WITKIT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace witkit {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ShapeError : Error {
  using Error::Error;
};

struct NotHermitianError : Error {
  using Error::Error;
};

struct GroupingError : Error {
  using Error::Error;
};

/// Some POVM element acquired a negative eigenvalue; carries the offender.
struct PositivityViolation : Error {
  PositivityViolation(int alpha_, int k_, double min_eig_)
      : Error("POVM element (" + std::to_string(alpha_) + "," + std::to_string(k_) +
              ") has min eigenvalue " + std::to_string(min_eig_)),
        alpha(alpha_), k(k_), min_eig(min_eig_) {}
  int alpha;
  int k;
  double min_eig;
};

struct RangeError : Error {
  using Error::Error;
};

struct InvalidRotation : Error {
  using Error::Error;
};

/// Map normalization b = (d-1)M(x-y)/d collapsed (x at the open boundary).
struct DegenerateScale : Error {
  using Error::Error;
};

struct SingularValueViolation : Error {
  using Error::Error;
};

struct StateError : Error {
  using Error::Error;
};

struct IoError : Error {
  using Error::Error;
};

}  // namespace witkit

#endif
