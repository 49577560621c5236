#pragma once

#include <stdexcept>
#include <string>

namespace realspec {

/// Thrown when two nonzero graded values of different pi^(h/2) grades are
/// added. Signals a homogeneity bug upstream, never expected in normal use.
class grading_error : public std::logic_error {
 public:
  explicit grading_error(const std::string& what) : std::logic_error(what) {}
};

/// Thrown when a parameter combination has no exact evaluation path
/// (mixed parities, or more than one odd truncation index).
class unsupported_exact_error : public std::domain_error {
 public:
  explicit unsupported_exact_error(const std::string& what)
      : std::domain_error(what) {}
};

/// Thrown when adaptive quadrature cannot reach the requested tolerance.
/// Carries the error estimate that was actually achieved.
class accuracy_error : public std::runtime_error {
 public:
  accuracy_error(const std::string& what, double achieved)
      : std::runtime_error(what + " (achieved error estimate " +
                           std::to_string(achieved) + ")"),
        achieved_(achieved) {}
  double achieved() const { return achieved_; }

 private:
  double achieved_;
};

}  // namespace realspec
