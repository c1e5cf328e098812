// Copyright 2026 The kronkit Authors
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

#ifndef KRONKIT_ERRORS_HPP_
#define KRONKIT_ERRORS_HPP_

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace kronkit {

// Bad argument values (n = 0, probability outside [0,1], vertex out of range).
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A documented precondition of an operation does not hold for its input,
// e.g. a disconnected factor passed to weichsel_connected.
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Malformed graph6 text. offset() is the byte offset of the offending
// character within the line.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " (at byte " + std::to_string(offset) + ")"),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

// The requested computation exceeds a configured budget or a supported size.
// required() is the work estimate that tripped the limit (for example the
// number of subsets an exhaustive scan would visit).
class SizeLimitError : public std::runtime_error {
 public:
  SizeLimitError(const std::string& what, std::uint64_t required)
      : std::runtime_error(what), required_(required) {}

  std::uint64_t required() const noexcept { return required_; }

 private:
  std::uint64_t required_;
};

// Rejection sampling gave up before finding a set that meets all conditions.
class SamplingExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace kronkit

#endif  // KRONKIT_ERRORS_HPP_
