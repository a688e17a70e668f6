// Copyright 2026 The sqlab Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SQLAB_ERROR_H_
#define SQLAB_ERROR_H_

#include <stdexcept>
#include <string>

namespace sqlab {

// Raised when an operation's documented precondition does not hold.
class PreconditionError : public std::invalid_argument {
 public:
  explicit PreconditionError(const std::string& what)
      : std::invalid_argument(what) {}
};

// Raised when a bound is requested outside the depth (or parameter) regime in
// which it is proven.
class RegimeError : public PreconditionError {
 public:
  explicit RegimeError(const std::string& what) : PreconditionError(what) {}
};

}  // namespace sqlab

#endif  // SQLAB_ERROR_H_
