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

#ifndef SRING_SUITES_H_
#define SRING_SUITES_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "sring/common.h"

namespace sring {

struct SuiteFailure {
  std::string input;    // enough to rebuild the case, e.g. "p=3 n=3 set=1,4"
  std::string message;  // what went wrong
};

struct SuiteReport {
  std::string name;
  int p = 0;
  std::uint64_t seed = 0;
  std::size_t trials = 0;
  std::size_t cases = 0;
  std::vector<SuiteFailure> failures;
  // Cases skipped because a search hit its size limit.
  std::size_t skipped = 0;
  double seconds = 0;

  bool passed() const { return failures.empty(); }
};

// Names accepted by verify_suite, in a fixed order.
const std::vector<std::string>& suite_names();

// Runs a property suite. Random inputs are drawn from a generator seeded
// with `seed`; `trials` bounds the number of random cases where the suite
// uses random inputs. Throws InputError for an unknown name or an
// unsupported p.
SuiteReport verify_suite(std::string_view name, int p, std::uint64_t seed,
                         std::size_t trials, const Deadline& deadline = {});

}  // namespace sring

#endif  // SRING_SUITES_H_
