#pragma once

#include <stdexcept>
#include <string>

namespace shgsq {

/// Invalid physical parameters, drive settings or operating points.
class ParameterError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The requested operating point is at or beyond the instability threshold.
class InstabilityError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A steady state does not solve the fixed-point equation for the drive it is
/// being combined with.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// An iterative solver failed to converge.
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace shgsq
