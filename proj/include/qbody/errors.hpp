// Copyright 2026 The qbody Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace qbody {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on an argument was violated (bad shape, odd m, NaN, ...).
class InvalidInputError : public Error {
 public:
  using Error::Error;
};

/// A matrix expected to be positive semidefinite has an eigenvalue below the floor.
class NotPsdError : public Error {
 public:
  NotPsdError(const std::string& what, double min_eigenvalue)
      : Error(what), min_eigenvalue_(min_eigenvalue) {}
  double min_eigenvalue() const noexcept { return min_eigenvalue_; }

 private:
  double min_eigenvalue_;
};

/// A proposed primal point violates the SDP constraints.
class InfeasiblePointError : public Error {
 public:
  using Error::Error;
};

class InvalidCombinationError : public Error {
 public:
  using Error::Error;
};

class InvalidConfigurationError : public Error {
 public:
  using Error::Error;
};

class InvalidMeasurementError : public Error {
 public:
  using Error::Error;
};

/// A quantity that must be real (or otherwise consistent) came out inconsistent.
class NumericalIntegrityError : public Error {
 public:
  using Error::Error;
};

/// The requested problem size exceeds what the dense routines support.
class ResourceError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace qbody
