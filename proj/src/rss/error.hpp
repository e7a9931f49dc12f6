#pragma once

#include <stdexcept>
#include <string>

namespace rss {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad input value or violated precondition.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Triangle with (nearly) collinear vertices; the recursion denominators vanish.
class DegenerateTriangleError : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

/// eps^2 does not exceed the ulp spacing of the longest triangle side, so the
/// segment antiderivatives can no longer be resolved in double precision.
class FloatingFloorError : public Error {
 public:
  using Error::Error;
};

/// Dense system could not be factored.
class SingularSystemError : public Error {
 public:
  SingularSystemError(const std::string& what, double condition_estimate)
      : Error(what), condition_estimate_(condition_estimate) {}
  double condition_estimate() const noexcept { return condition_estimate_; }

 private:
  double condition_estimate_;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace rss
