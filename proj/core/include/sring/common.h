// Copyright 2026 The sring Authors.
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

#ifndef SRING_COMMON_H_
#define SRING_COMMON_H_

#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace sring {

// Index of an element of Z_p^n under the little-endian base-p bijection.
using Index = std::uint32_t;

// Sorted, duplicate-free list of element indices.
using ElementSet = std::vector<Index>;

// Raised when a precondition on the inputs is violated.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Raised when an operation would exceed a supported size limit.
class LimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised when a wall-clock budget runs out. No partial result is returned.
class TimeoutError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Wall-clock budget shared by the search routines.
class Deadline {
 public:
  using Clock = std::chrono::steady_clock;

  // A deadline that never expires.
  Deadline() = default;

  static Deadline after(std::chrono::duration<double> budget) {
    Deadline d;
    d.end_ = Clock::now() +
             std::chrono::duration_cast<Clock::duration>(budget);
    return d;
  }
  static Deadline after_seconds(double seconds) {
    return after(std::chrono::duration<double>(seconds));
  }

  bool unlimited() const { return !end_.has_value(); }
  bool expired() const { return end_ && Clock::now() >= *end_; }

  // Throws TimeoutError naming `what` once the budget is gone.
  void check(const char* what) const {
    if (expired()) throw TimeoutError(std::string("time limit exceeded: ") + what);
  }

 private:
  std::optional<Clock::time_point> end_;
};

}  // namespace sring

#endif  // SRING_COMMON_H_
