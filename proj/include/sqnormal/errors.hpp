// Copyright 2026 The sqnormal Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SQNORMAL_ERRORS_HPP
#define SQNORMAL_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sqnormal {

// Raised when inputs violate an operation's precondition (perfect square,
// insufficient precision, value out of range). Maps to CLI exit code 2.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Raised when an exact identity or tail relation fails to hold. Since every
// checked relation is a theorem about exact digits, this always indicates a
// bug or an injected fault. Maps to CLI exit code 1.
class VerificationError : public std::runtime_error {
 public:
  // position is the 1-based fractional digit where the violation was found,
  // or 0 when the failure is not tied to a single digit.
  VerificationError(const std::string& what, std::size_t position = 0)
      : std::runtime_error(what), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace sqnormal

#endif  // SQNORMAL_ERRORS_HPP
