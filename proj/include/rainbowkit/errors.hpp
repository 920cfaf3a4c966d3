// Copyright 2026 The rainbowkit Authors
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

namespace rainbowkit {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input violates an operation's precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Two edges offered as a matching share a vertex.
class OverlapError : public Error {
 public:
  using Error::Error;
};

class NotAugmentingError : public Error {
 public:
  using Error::Error;
};

/// A path is not a simple s-t path (or s-v path where one is expected).
class MalformedPathError : public Error {
 public:
  using Error::Error;
};

/// Two paths of one group share an inner node.
class InnerOverlapError : public Error {
 public:
  using Error::Error;
};

class NoUnrepresentedColors : public Error {
 public:
  using Error::Error;
};

class RowDuplicateError : public Error {
 public:
  using Error::Error;
};

class InfeasibleSpec : public Error {
 public:
  using Error::Error;
};

/// An exhaustive search ran past its step budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

// The following signal that a proven guarantee did not materialize. They are
// never a valid outcome; raising one means the implementation is wrong.

class GuaranteeViolation : public Error {
 public:
  using Error::Error;
};

class TheoremViolation : public Error {
 public:
  using Error::Error;
};

class DichotomyViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace rainbowkit
