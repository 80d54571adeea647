#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace isospec {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

// Global tolerance policy. All residual checks in the library are relative;
// see the individual operations for the scaling they use.
struct Tolerances {
  double hermiticity = 1e-10;    // relative bound on ||M - M^dag||
  double commutator = 1e-10;     // relative bound on ||[A, B]||
  double invertibility = 1e-10;  // min relative eigenvalue of a positive operator
  double eigen_match = 1e-8;     // absolute gap for eigenvalue multiset matching
  double zero_vector = 1e-10;    // relative norm below which an image counts as zero

  void validate() const {
    for (double t : {hermiticity, commutator, invertibility, eigen_match, zero_vector}) {
      if (!(t > 0.0) || !(t < 1.0))
        throw std::invalid_argument("tolerances must lie strictly between 0 and 1");
    }
  }
};

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
  virtual const char* kind() const noexcept { return "Error"; }
};

#define ISOSPEC_DEFINE_ERROR(NAME)                              \
  struct NAME : Error {                                         \
    using Error::Error;                                         \
    const char* kind() const noexcept override { return #NAME; } \
  }

// Mathematical failures (CLI exit code 1).
ISOSPEC_DEFINE_ERROR(DimensionMismatch);
ISOSPEC_DEFINE_ERROR(NotHermitian);
ISOSPEC_DEFINE_ERROR(NotInvertible);
ISOSPEC_DEFINE_ERROR(CommutatorViolation);
ISOSPEC_DEFINE_ERROR(EigenResidualViolation);
ISOSPEC_DEFINE_ERROR(NotAFrame);
ISOSPEC_DEFINE_ERROR(NotTight);
ISOSPEC_DEFINE_ERROR(InvalidPartition);
ISOSPEC_DEFINE_ERROR(NotIsometryLike);

// Input failures (CLI exit code 2).
ISOSPEC_DEFINE_ERROR(IoError);
ISOSPEC_DEFINE_ERROR(ParseError);
ISOSPEC_DEFINE_ERROR(ShapeError);

#undef ISOSPEC_DEFINE_ERROR

}  // namespace isospec
