// Copyright 2026 The Ideonaut Authors.
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

#ifndef IDEONAUT_ERROR_H_
#define IDEONAUT_ERROR_H_

#include <stdexcept>
#include <string>

namespace ideonaut {

// Base of every exception the library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A caller violated an operation's precondition.
class InvalidArgumentError : public Error {
 public:
  using Error::Error;
};

// Malformed configuration, task, baseline or world files.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Binary or text payload that does not conform to its format.
class FormatError : public Error {
 public:
  using Error::Error;
};

// Encoder, decoder or judge failed after exhausting retries.
class BackendError : public Error {
 public:
  using Error::Error;
};

// Judge reply could not be turned into a score card.
class ScoringError : public BackendError {
 public:
  using BackendError::BackendError;
};

// An internal invariant was violated; indicates a bug or corrupted state.
class InvariantError : public Error {
 public:
  using Error::Error;
};

}  // namespace ideonaut

#endif  // IDEONAUT_ERROR_H_
