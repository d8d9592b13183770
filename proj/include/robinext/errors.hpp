// Copyright 2026 The robinext Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ROBINEXT_ERRORS_HPP
#define ROBINEXT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace robinext {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Result (or an intermediate) not representable in double precision.
class RangeError : public std::range_error {
 public:
  using std::range_error::range_error;
};

/// alpha >= alpha*: the principal point of the spectrum is 0 and lies in the
/// essential spectrum, so there is no discrete eigenvalue to return.
class NoDiscreteEigenvalue : public std::runtime_error {
 public:
  NoDiscreteEigenvalue(const std::string& what, double alpha, double alpha_star)
      : std::runtime_error(what), alpha_(alpha), alpha_star_(alpha_star) {}

  double alpha() const noexcept { return alpha_; }
  double alpha_star() const noexcept { return alpha_star_; }

 private:
  double alpha_;
  double alpha_star_;
};

class SolverFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A perturbation spectrum breaks the measure-preserving or barycenter condition.
class ConstraintViolation : public std::invalid_argument {
 public:
  enum class Kind { measure_preserving, barycenter, malformed };

  ConstraintViolation(Kind kind, const std::string& what)
      : std::invalid_argument(what), kind_(kind) {}

  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

/// Ratio of two quadratic forms requested on an input where both vanish.
class DegenerateInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed grid, spectrum or table input; the message carries the line number.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace robinext

#endif  // ROBINEXT_ERRORS_HPP
