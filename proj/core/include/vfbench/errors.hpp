/*
 * Copyright 2026 The vfbench Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <stdexcept>
#include <string>

namespace vfb {

/// Base of all toolkit errors. The CLI maps each subclass onto an exit code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition of an operation was violated (wrong encoding, out-of-range
/// samples, bad parameter).
class ContractError : public Error {
 public:
  using Error::Error;
};

/// Inputs are individually readable but do not fit together (mixed frame
/// sizes, empty directories, mismatched frame counts).
class StructuralError : public Error {
 public:
  using Error::Error;
};

/// A file or directory could not be read or written.
class IoError : public Error {
 public:
  using Error::Error;
};

/// Throws ContractError with `message` unless `condition` holds.
void require(bool condition, const std::string& message);

}  // namespace vfb
