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

#include <random>

#include "oracles.h"
#include "sring/build.h"
#include "sring/catalog.h"

namespace sring {
namespace {

// Every subgroup of UT(3, p) is generated by two elements, so closing all
// generator pairs lists them.
std::size_t subgroup_count_by_closure(int p) {
  GroupContext ctx(p, 3);
  const auto ut = unitriangular_group(ctx);
  std::set<std::vector<AutMatrix>> groups;
  for (const AutMatrix& a : ut)
    for (const AutMatrix& b : ut) {
      const std::vector<AutMatrix> gens = {a, b};
      groups.insert(matrix_group_elements(gens, p, 3));
    }
  return groups.size();
}

TEST(Exceptional, Shape) {
  const SRing ex3 = exceptional_sring(3);
  EXPECT_EQ(ex3.rank(), 11u);
  EXPECT_EQ(thin_radical(ex3).order(), 3u);
  const SRing ex5 = exceptional_sring(5);
  EXPECT_EQ(ex5.rank(), 29u);
  std::size_t singletons = 0;
  for (const auto& c : ex5.classes()) {
    singletons += c.size() == 1;
    EXPECT_TRUE(c.size() == 1 || c.size() == 5);
  }
  EXPECT_EQ(singletons, 5u);
  EXPECT_THROW(exceptional_sring(11), InputError);
  EXPECT_THROW(exceptional_sring(4), InputError);
}

TEST(Ll2, Shape) {
  const Ll2Ring ll = ll2_sring(3);
  EXPECT_EQ(ll.ring.rank(), 51u);
  const auto group = matrix_group_elements(ll.group, 3, 5);
  EXPECT_EQ(group.size(), 9u);
  for (const AutMatrix& a : group)
    for (const AutMatrix& b : group) EXPECT_EQ(a * b, b * a);
  EXPECT_EQ(centralizer_subspace(ll.ring.context(), ll.group).dim(), 3);
  EXPECT_FALSE(decomposability_witness(ll.ring).has_value());
  EXPECT_THROW(ll2_sring(7), InputError);
}

TEST(MatrixSubgroups, HeisenbergCounts) {
  GroupContext ctx(3, 3);
  const auto ut3 = unitriangular_group(ctx);
  const auto subs3 = matrix_subgroups(ut3);
  EXPECT_EQ(subs3.size(), 19u);
  EXPECT_EQ(subs3.size(), subgroup_count_by_closure(3));
  const auto ut5 = unitriangular_group(GroupContext(5, 3));
  EXPECT_EQ(matrix_subgroups(ut5).size(), 39u);
  for (const auto& g : subs3) {
    const std::size_t order = g.size();
    EXPECT_TRUE(order == 1 || order == 3 || order == 9 || order == 27);
  }
}

TEST(ReferenceRings, RanksAndFlags) {
  const auto rows = table1_reference_rings(3);
  ASSERT_EQ(rows.size(), kTable1Rows);
  const std::vector<std::size_t> ranks = {27, 11, 11, 15, 7, 11};
  for (std::size_t i = 0; i < rows.size(); ++i) {
    EXPECT_EQ(rows[i].rank(), ranks[i]) << "row " << i + 1;
    EXPECT_TRUE(oracle::is_sring(rows[i].context(), rows[i].classes()));
    EXPECT_EQ(fingerprint(rows[i]).decomposable, i != 0 && i != 5);
    EXPECT_TRUE(is_p_sring(rows[i]));
  }
}

TEST(Table1, PThree) {
  const ClassificationReport r = build_table1(3);
  EXPECT_EQ(r.total_inputs, 19u);
  ASSERT_EQ(r.classes.size(), 6u);
  EXPECT_TRUE(r.matches_table());
  std::size_t members = 0;
  for (const auto& c : r.classes) {
    members += c.member_count;
    EXPECT_TRUE(c.schurian);
    if (!c.fingerprint.decomposable) {
      EXPECT_TRUE(c.fingerprint.rank == 27 || c.fingerprint.rank == 11);
      if (c.fingerprint.rank == 11) EXPECT_EQ(thin_radical(c.representative).order(), 3u);
    }
  }
  EXPECT_EQ(members, r.total_inputs);
  for (std::size_t i = 0; i < r.classes.size(); ++i)
    for (std::size_t j = i + 1; j < r.classes.size(); ++j)
      EXPECT_FALSE(
          cayley_isomorphic(r.classes[i].representative, r.classes[j].representative));
}

TEST(Table1, RejectsUnsupportedPrimes) {
  EXPECT_THROW(build_table1(7), InputError);
  EXPECT_THROW(build_table1(9), InputError);
}

TEST(Table1, MatchesTableDetectsTampering) {
  ClassificationReport r = build_table1(3);
  ASSERT_TRUE(r.matches_table());
  r.classes.pop_back();
  EXPECT_FALSE(r.matches_table());
}

TEST(Table1, Deadline) {
  EXPECT_THROW(build_table1(5, Deadline::after_seconds(0)), TimeoutError);
}

TEST(RandomUnitriangular, IsUnitriangularAndSeeded) {
  std::mt19937_64 a(3), b(3);
  for (int i = 0; i < 10; ++i) {
    const AutMatrix x = random_unitriangular(5, 4, a);
    EXPECT_EQ(x, random_unitriangular(5, 4, b));
    for (int r = 0; r < 4; ++r) {
      EXPECT_EQ(x.matrix().at(r, r), 1);
      for (int c = 0; c < r; ++c) EXPECT_EQ(x.matrix().at(r, c), 0);
    }
  }
}

}  // namespace
}  // namespace sring
