// Copyright 2026 The Arrival Authors
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

#ifndef ARRIVAL_ERRORS_H_
#define ARRIVAL_ERRORS_H_

#include <stdexcept>
#include <string>

namespace arrival {

// Base of every error the library throws.
class ArrivalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The input (instance, set, weights, parameters) is malformed.
class ValidationError : public ArrivalError {
 public:
  using ArrivalError::ArrivalError;
};

// Text input could not be parsed. `line()` is 1-based; 0 means "whole input".
class ParseError : public ValidationError {
 public:
  ParseError(int line, const std::string& message)
      : ValidationError(line > 0 ? "line " + std::to_string(line) + ": " + message
                                 : message),
        line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

// The run procedure exceeded its step cap without reaching a destination.
class StepCapExceeded : public ArrivalError {
 public:
  using ArrivalError::ArrivalError;
};

// A produced certificate failed its own verification. Always a bug.
class CertificateError : public ArrivalError {
 public:
  using ArrivalError::ArrivalError;
};

// The feedback-vertex-set route cannot run within the requested size.
class FvsRefusal : public ArrivalError {
 public:
  using ArrivalError::ArrivalError;
};

// Two deciders returned different destinations.
class DisagreementError : public ArrivalError {
 public:
  using ArrivalError::ArrivalError;
};

}  // namespace arrival

#endif  // ARRIVAL_ERRORS_H_
