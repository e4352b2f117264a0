// Copyright 2026 The farmlayout Authors
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

#pragma once

#include <stdexcept>

namespace farmlayout {

/// Base class of every error thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: bad files, out-of-range arguments, degenerate geometry.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// A turbine layout that violates structural requirements (e.g. coincident
/// positions).
class InvalidLayout : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

/// Initial placement could not satisfy the minimum point separation.
class InitializationFailure : public Error {
 public:
  using Error::Error;
};

/// No optimization start produced a feasible layout.
class OptimizationFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace farmlayout
