/*
   Copyright 2026 The xop Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef XOP_ERRORS_HPP
#define XOP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace xop {

/// Root of the library's exception hierarchy.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad user-level input: malformed partitions, parameters outside a
/// family's range, degrees outside the index set.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

class IndexSetError : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

/// Wronskian inputs that do not share one carrier.
class CarrierMismatch : public Error {
 public:
  using Error::Error;
};

/// A quasi-function that was expected to collapse to a polynomial did not.
class NonPolynomialError : public Error {
 public:
  using Error::Error;
};

class DegreeMismatch : public Error {
 public:
  DegreeMismatch(int expected, int actual)
      : Error("degree mismatch: expected " + std::to_string(expected) + ", got " +
              std::to_string(actual)),
        expected_(expected),
        actual_(actual) {}
  int expected() const { return expected_; }
  int actual() const { return actual_; }

 private:
  int expected_;
  int actual_;
};

/// Evaluation point coincides with a pole of an ODE coefficient or of a
/// reciprocal sum.
class PoleError : public Error {
 public:
  using Error::Error;
};

/// A square-root limit formula was asked for a point on its branch cut.
class BranchCutError : public Error {
 public:
  using Error::Error;
};

class MatchingError : public Error {
 public:
  using Error::Error;
};

}  // namespace xop

#endif  // XOP_ERRORS_HPP
