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

#include <gtest/gtest.h>

#include "sring/suites.h"

namespace sring {
namespace {

class EverySuite : public ::testing::TestWithParam<std::string> {};

TEST_P(EverySuite, PassesAtThree) {
  const SuiteReport r = verify_suite(GetParam(), 3, 7, 10);
  EXPECT_TRUE(r.passed()) << (r.failures.empty() ? "" : r.failures[0].input + ": " + r.failures[0].message);
  EXPECT_GT(r.cases, 0u);
  EXPECT_EQ(r.name, GetParam());
}

INSTANTIATE_TEST_SUITE_P(Suites, EverySuite, ::testing::ValuesIn(suite_names()),
                         [](const auto& info) {
                           std::string name = info.param;
                           for (char& c : name)
                             if (c == '-') c = '_';
                           return name;
                         });

TEST(Suites, Deterministic) {
  const SuiteReport a = verify_suite("schur-multiplier", 3, 99, 15);
  const SuiteReport b = verify_suite("schur-multiplier", 3, 99, 15);
  EXPECT_EQ(a.cases, b.cases);
  EXPECT_EQ(a.skipped, b.skipped);
  EXPECT_EQ(a.failures.size(), b.failures.size());
}

TEST(Suites, RejectsUnknownNameAndPrime) {
  EXPECT_THROW(verify_suite("no-such-suite", 3, 1, 1), InputError);
  EXPECT_THROW(verify_suite("kernel", 7, 1, 1), InputError);
  EXPECT_THROW(verify_suite("teq-z34", 5, 1, 1), InputError);
}

TEST(Suites, NamesAreListedOnce) {
  const auto& names = suite_names();
  EXPECT_EQ(names.size(), 16u);
  EXPECT_EQ(std::set<std::string>(names.begin(), names.end()).size(), names.size());
}

}  // namespace
}  // namespace sring
