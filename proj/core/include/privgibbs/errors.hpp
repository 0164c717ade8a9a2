// Copyright 2026 The privgibbs Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PRIVGIBBS_ERRORS_HPP_
#define PRIVGIBBS_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace privgibbs {

// Malformed or inconsistent run configuration. CLI exit code 2.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Input data that does not match the declared schema. CLI exit code 3.
class DataError : public std::runtime_error {
 public:
  explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

// A runtime invariant was falsified (e.g. the acceptance probability dropped
// below its exp(-epsilon) floor, or the cached summary drifted away from the
// from-scratch recomputation). CLI exit code 4.
class InvariantViolation : public std::runtime_error {
 public:
  explicit InvariantViolation(const std::string& what)
      : std::runtime_error(what) {}
};

// Numerical failure inside a linear-algebra routine (e.g. a covariance
// matrix that is not positive definite).
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace privgibbs

#endif  // PRIVGIBBS_ERRORS_HPP_
