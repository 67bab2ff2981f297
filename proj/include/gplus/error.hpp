// Copyright 2026 The gplus Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
/**
 * @file
 * Exception types shared by every module.
 */
#pragma once

#include <stdexcept>
#include <string>

namespace gplus {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// An argument lies outside the mathematical domain of an operation.
class DomainError : public Error {
  public:
    using Error::Error;
};

/// Operands are individually valid but used inconsistently (e.g. mismatched
/// qubit counts).
class UsageError : public Error {
  public:
    using Error::Error;
};

/// A request would exceed the configured simulation memory cap.
class ResourceError : public Error {
  public:
    using Error::Error;
};

} // namespace gplus
