#pragma once

#include <stdexcept>
#include <string>

namespace cnniep {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class NotCentrosymmetric : public Error {
 public:
  NotCentrosymmetric(const std::string& what, double residual)
      : Error(what), residual_(residual) {}
  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

class NonConvergence : public Error {
 public:
  using Error::Error;
};

/// A hypothesis of a construction does not hold. Carries the name of the
/// first violated inequality and its (negative) margin.
class ConditionFailed : public Error {
 public:
  ConditionFailed(std::string inequality, double margin)
      : Error("condition failed: " + inequality +
              " (margin " + std::to_string(margin) + ")"),
        inequality_(std::move(inequality)),
        margin_(margin) {}

  const std::string& inequality() const noexcept { return inequality_; }
  double margin() const noexcept { return margin_; }

 private:
  std::string inequality_;
  double margin_;
};

/// An identity that must hold by construction was violated numerically.
class InternalCheck : public Error {
 public:
  using Error::Error;
};

class NotSelfConjugate : public Error {
 public:
  using Error::Error;
};

class PerronViolation : public Error {
 public:
  using Error::Error;
};

/// Input does not match the structure required by a partition-based realization.
class PartitionError : public Error {
 public:
  using Error::Error;
};

}  // namespace cnniep
