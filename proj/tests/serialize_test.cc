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

#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "sring/analysis.h"
#include "sring/build.h"
#include "sring/catalog.h"
#include "sring/serialize.h"

namespace sring {
namespace {

std::string read_fixture(const std::string& name) {
  std::ifstream in(std::string(SRING_FIXTURE_DIR) + "/" + name);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::size_t error_line(std::string_view text) {
  try {
    parse_sring(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

TEST(SringFormat, RoundTrip) {
  const SRing ex = exceptional_sring(3);
  const std::string text = format_sring(ex);
  EXPECT_EQ(parse_sring(text), ex);
  EXPECT_EQ(format_sring(parse_sring(text)), text);
  const SRing full = SRing::full_group_algebra(GroupContext(5, 2));
  EXPECT_EQ(parse_sring(format_sring(full)), full);
}

TEST(SringFormat, FrozenExceptionalFixture) {
  const std::string text = read_fixture("exceptional_p3.txt");
  ASSERT_FALSE(text.empty());
  EXPECT_EQ(parse_sring(text), exceptional_sring(3));
  EXPECT_EQ(format_sring(exceptional_sring(3)), text);
}

TEST(SringFormat, AcceptsAnyClassOrder) {
  const SRing a = parse_sring("p=3 n=1\n1\n2\n0\n");
  EXPECT_EQ(a, SRing::full_group_algebra(GroupContext(3, 1)));
}

TEST(SringFormat, ErrorsCarryLineNumbers) {
  EXPECT_EQ(error_line("p=3 n=1\n0\n1 x\n2\n"), 3u);
  EXPECT_EQ(error_line("q=3 n=1\n0\n1 2\n"), 1u);
  EXPECT_EQ(error_line("p=3 n=1\n0\n1 7\n2\n"), 3u);
  EXPECT_EQ(error_line("p=3 n=1\n0\n1\n1 2\n"), 4u);
  EXPECT_THROW(parse_sring("p=3 n=1\n0 1\n2\n"), ParseError);
  EXPECT_THROW(parse_sring("p=3 n=1\n0\n1\n"), ParseError);
  EXPECT_THROW(parse_sring("p=4 n=1\n0\n1\n2\n3\n"), InputError);
  // Not an S-ring: {0}, {(1,0)}, rest over Z_3^2.
  EXPECT_THROW(parse_sring("p=3 n=2\n0\n1\n2 3 4 5 6 7 8\n"), ParseError);
}

TEST(SringFormat, ParsePartitionSkipsAxioms) {
  const ParsedPartition pp = parse_partition("p=3 n=2\n0\n1\n2 3 4 5 6 7 8\n");
  EXPECT_EQ(pp.ctx, GroupContext(3, 2));
  EXPECT_EQ(pp.classes.size(), 3u);
  EXPECT_FALSE(verify_sring(pp.ctx, pp.classes).ok());
}

TEST(PermGroupFormat, RoundTrip) {
  const PermGroup g = aut_group(exceptional_sring(3));
  const std::string text = format_perm_group(g);
  const PermGroup back = parse_perm_group(text);
  EXPECT_TRUE(back.same_group(g));
  EXPECT_EQ(format_perm_group(back), text);
  EXPECT_THROW(parse_perm_group("deg=3\n0 1 1\n"), InputError);
  EXPECT_THROW(parse_perm_group("deg=3\n0 1\n"), ParseError);
}

TEST(Matrices, ParseBlocks) {
  const auto mats = parse_matrices(3, 2, "1 1\n0 1\n\n1 0\n2 1\n");
  ASSERT_EQ(mats.size(), 2u);
  EXPECT_EQ(mats[0].matrix(), Matrix(3, 2, {1, 1, 0, 1}));
  EXPECT_EQ(mats[1].matrix(), Matrix(3, 2, {1, 0, 2, 1}));
  EXPECT_THROW(parse_matrices(3, 2, "1 1\n1 1\n"), InputError);
  EXPECT_THROW(parse_matrices(3, 2, "1 1 1\n0 1\n"), ParseError);
}

TEST(Lists, SetAndIndexLists) {
  EXPECT_EQ(parse_index_list("3,1,2"), (ElementSet{1, 2, 3}));
  EXPECT_EQ(parse_set_list("1,2;4"), (std::vector<ElementSet>{{1, 2}, {4}}));
  EXPECT_THROW(parse_index_list("1,,2"), InputError);
}

TEST(Reports, Table1GoldenText) {
  const std::string golden = read_fixture("table1_p3.txt");
  ASSERT_FALSE(golden.empty());
  EXPECT_EQ(format_report(build_table1(3)), golden);
}

TEST(Reports, JsonIsWellFormed) {
  const auto table = nlohmann::json::parse(format_report_json(build_table1(3)));
  EXPECT_EQ(table["classes"].size(), 6u);
  EXPECT_TRUE(table["matches_table"].get<bool>());
  const auto suite = nlohmann::json::parse(format_report_json(verify_suite("kernel", 3, 1, 3)));
  EXPECT_EQ(suite["suite"], "kernel");
  EXPECT_EQ(suite["verdict"], "pass");
}

}  // namespace
}  // namespace sring
