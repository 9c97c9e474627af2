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
#include "sring/analysis.h"
#include "sring/perm_group.h"

namespace sring {
namespace {

Permutation cycle(std::size_t degree, std::vector<Point> points) {
  std::vector<Point> images(degree);
  for (std::size_t i = 0; i < degree; ++i) images[i] = static_cast<Point>(i);
  for (std::size_t i = 0; i < points.size(); ++i)
    images[points[i]] = points[(i + 1) % points.size()];
  return Permutation(images);
}

Permutation full_cycle(std::size_t degree) {
  std::vector<Point> points(degree);
  for (std::size_t i = 0; i < degree; ++i) points[i] = static_cast<Point>(i);
  return cycle(degree, points);
}

Permutation random_perm(std::size_t degree, std::mt19937_64& rng) {
  std::vector<Point> images(degree);
  for (std::size_t i = 0; i < degree; ++i) images[i] = static_cast<Point>(i);
  std::shuffle(images.begin(), images.end(), rng);
  return Permutation(images);
}

TEST(Permutation, ActsOnTheRight) {
  const Permutation a = cycle(3, {0, 1});
  const Permutation b = cycle(3, {1, 2});
  // 0 -a-> 1 -b-> 2.
  EXPECT_EQ((a * b)(0), 2);
  EXPECT_EQ((a * a.inverse()), Permutation::identity(3));
  EXPECT_EQ(cycle(5, {0, 1, 2, 3, 4}).order(), 5u);
  EXPECT_EQ(cycle(5, {0, 1, 2, 3, 4}).pow(5), Permutation::identity(5));
  EXPECT_THROW(Permutation(std::vector<Point>{0, 0, 1}), InputError);
}

TEST(PermGroup, SymmetricAndAlternatingOrders) {
  const PermGroup s6 = PermGroup::generate(6, {cycle(6, {0, 1}), cycle(6, {0, 1, 2, 3, 4, 5})});
  EXPECT_EQ(s6.order(), 720);
  const PermGroup a5 = PermGroup::generate(5, {cycle(5, {0, 1, 2}), cycle(5, {0, 1, 2, 3, 4})});
  EXPECT_EQ(a5.order(), 60);
  EXPECT_FALSE(a5.contains(cycle(5, {0, 1})));
  EXPECT_TRUE(a5.contains(cycle(5, {2, 3, 4})));
  const PermGroup big = PermGroup::generate(40, {cycle(40, {0, 1}), full_cycle(40)});
  BigInt factorial = 1;
  for (int i = 2; i <= 40; ++i) factorial *= i;
  EXPECT_EQ(big.order(), factorial);
}

TEST(PermGroup, RandomGroupsMatchClosure) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t degree = 4 + rng() % 4;
    std::vector<Permutation> gens;
    for (int k = 0; k < 2; ++k) {
      // Sparse generators keep most groups small.
      Permutation g = random_perm(degree, rng);
      if (rng() % 2) g = g.pow(2);
      gens.push_back(g);
    }
    const auto closure = oracle::group_closure(degree, gens);
    const PermGroup g = PermGroup::generate(degree, gens);
    EXPECT_EQ(g.order(), BigInt(closure.size()));
    const auto listed = g.elements();
    EXPECT_EQ(std::set<Permutation>(listed.begin(), listed.end()), closure);
    EXPECT_EQ(orbits(degree, gens), oracle::orbits_by_union(degree, gens));
    for (int k = 0; k < 5; ++k) {
      const Permutation x = random_perm(degree, rng);
      EXPECT_EQ(g.contains(x), closure.count(x) == 1);
    }
    const PermGroup stab = g.point_stabilizer(0);
    std::size_t fixing = 0;
    for (const Permutation& x : closure) fixing += x(0) == 0;
    EXPECT_EQ(stab.order(), BigInt(fixing));
  }
}

TEST(PermGroup, BasePrefixIsRespected) {
  const PermGroup s4 = PermGroup::generate(4, {cycle(4, {0, 1}), cycle(4, {0, 1, 2, 3})},
                                           std::vector<Point>{3, 1});
  ASSERT_GE(s4.base().size(), 2u);
  EXPECT_EQ(s4.base()[0], 3);
  EXPECT_EQ(s4.base()[1], 1);
  EXPECT_EQ(s4.basic_orbit(0).size(), 4u);
  EXPECT_TRUE(s4.same_group(PermGroup::generate(4, {cycle(4, {0, 1}), cycle(4, {1, 2}), cycle(4, {2, 3})})));
}

TEST(PermGroup, PGroupAndTransitivity) {
  GroupContext ctx(3, 2);
  const PermGroup t = translation_group(ctx);
  EXPECT_EQ(t.order(), 9);
  EXPECT_TRUE(t.is_transitive());
  EXPECT_TRUE(t.is_p_group(3));
  EXPECT_FALSE(t.is_p_group(5));
}

TEST(PermGroup, ElementLimit) {
  const PermGroup s9 = PermGroup::generate(9, {cycle(9, {0, 1}), full_cycle(9)});
  EXPECT_THROW(s9.elements(1000), LimitError);
}

TEST(ColoringAutomorphisms, MatchBruteForce) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 25; ++trial) {
    const std::size_t n = 5 + rng() % 4;
    PairColoring c;
    c.degree = n;
    c.num_colors = 3;
    c.colors.assign(n * n, 0);
    // Symmetric random graph with colored loops.
    for (std::size_t u = 0; u < n; ++u) {
      c.colors[u * n + u] = 2;
      for (std::size_t v = u + 1; v < n; ++v) {
        const std::uint32_t x = (rng() % 3 == 0) ? 1 : 0;
        c.colors[u * n + v] = c.colors[v * n + u] = x;
      }
    }
    std::vector<std::uint32_t> vertex(n, 0);
    if (trial % 3 == 0) vertex[rng() % n] = 1;
    const auto brute = oracle::brute_automorphisms(c, vertex);
    const PermGroup g = coloring_automorphisms(c, vertex);
    EXPECT_EQ(g.order(), BigInt(brute.size()));
    for (const Permutation& x : brute) EXPECT_TRUE(g.contains(x));
  }
}

TEST(ColoringAutomorphisms, PetersenGraph) {
  // Vertices are 2-subsets of {0..4}; adjacent when disjoint.
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < 5; ++a)
    for (int b = a + 1; b < 5; ++b) pairs.emplace_back(a, b);
  PairColoring c;
  c.degree = 10;
  c.num_colors = 3;
  for (auto [a, b] : pairs)
    for (auto [x, y] : pairs) {
      const bool same = a == x && b == y;
      const bool disjoint = a != x && a != y && b != x && b != y;
      c.colors.push_back(same ? 2 : disjoint ? 1 : 0);
    }
  EXPECT_EQ(coloring_automorphisms(c, {}).order(), 120);
}

TEST(Orbitals, TwoClosureOfCyclicGroup) {
  // C_5 is 2-closed; its orbitals are the five differences.
  const PermGroup c5 = PermGroup::generate(5, {cycle(5, {0, 1, 2, 3, 4})});
  EXPECT_EQ(orbitals(c5).num_colors, 5u);
  EXPECT_TRUE(two_closure(c5).same_group(c5));
  // The 2-closure of a 2-transitive group is the symmetric group.
  const PermGroup a5 = PermGroup::generate(5, {cycle(5, {0, 1, 2}), cycle(5, {0, 1, 2, 3, 4})});
  EXPECT_EQ(two_closure(a5).order(), 120);
}

TEST(Orbitals, TwoClosureContainsGroupAndIsIdempotent) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 10; ++trial) {
    const std::size_t n = 6 + rng() % 3;
    std::vector<Permutation> gens = {random_perm(n, rng).pow(2), random_perm(n, rng).pow(3)};
    const PermGroup g = PermGroup::generate(n, gens);
    const PermGroup closed = two_closure(g);
    EXPECT_TRUE(closed.contains_group(g));
    EXPECT_EQ(orbitals(closed), orbitals(g));
    EXPECT_TRUE(two_closure(closed).same_group(closed));
  }
}

TEST(Affine, TranslationsAndMatrices) {
  GroupContext ctx(3, 2);
  const AutMatrix m(Matrix(3, 2, {1, 1, 0, 1}));
  const std::vector<int> t = {2, 1};
  const Permutation g = perm_from_affine(ctx, m, t);
  for (Index x = 0; x < ctx.order(); ++x)
    EXPECT_EQ(g(static_cast<Point>(x)), ctx.add(m.apply_index(ctx, x), ctx.to_index(t)));
  EXPECT_EQ(translation(ctx, 4)(0), 4);
}

// Regular elementary abelian subgroups of order 9, from commuting pairs of
// fixed-point-free elements of order 3.
std::set<std::set<Permutation>> regular_by_pairs(const std::vector<Permutation>& elements) {
  std::vector<Permutation> candidates;
  for (const Permutation& g : elements)
    if (g.order() == 3 && g.fixed_points() == 0) candidates.push_back(g);
  std::set<std::set<Permutation>> out;
  for (std::size_t i = 0; i < candidates.size(); ++i)
    for (std::size_t j = i + 1; j < candidates.size(); ++j) {
      const Permutation& a = candidates[i];
      const Permutation& b = candidates[j];
      if (a * b != b * a || b == a * a) continue;
      const auto group = oracle::group_closure(9, {a, b});
      bool regular = group.size() == 9;
      for (const Permutation& g : group) regular = regular && (g.is_identity() || g.fixed_points() == 0);
      if (regular) out.insert(group);
    }
  return out;
}

void expect_matches_pair_scan(const PermGroup& g, const GroupContext& ctx) {
  const auto regular = regular_elem_abelian_subgroups(g, ctx);
  std::set<std::set<Permutation>> got;
  for (const PermGroup& r : regular) {
    const auto elems = r.elements();
    got.insert(std::set<Permutation>(elems.begin(), elems.end()));
  }
  EXPECT_EQ(got.size(), regular.size());
  EXPECT_EQ(got, regular_by_pairs(g.elements()));
}

TEST(RegularSubgroups, SymmetricGroupOnNinePoints) {
  // 9! / |AGL(2, 3)| = 840 copies.
  GroupContext ctx(3, 2);
  const PermGroup s9 = PermGroup::generate(9, {cycle(9, {0, 1}), full_cycle(9)});
  EXPECT_EQ(regular_elem_abelian_subgroups(s9, ctx).size(), 840u);
  expect_matches_pair_scan(s9, ctx);
}

TEST(RegularSubgroups, AffineGroups) {
  GroupContext ctx(3, 2);
  const std::vector<int> zero = {0, 0};
  std::vector<Permutation> gens = {translation(ctx, 1), translation(ctx, 3)};
  expect_matches_pair_scan(PermGroup::generate(9, gens), ctx);
  EXPECT_EQ(regular_elem_abelian_subgroups(PermGroup::generate(9, gens), ctx).size(), 1u);
  gens.push_back(perm_from_affine(ctx, AutMatrix(Matrix(3, 2, {1, 1, 0, 1})), zero));
  expect_matches_pair_scan(PermGroup::generate(9, gens), ctx);
  gens.push_back(perm_from_affine(ctx, AutMatrix(Matrix(3, 2, {0, 1, 2, 0})), zero));
  expect_matches_pair_scan(PermGroup::generate(9, gens), ctx);
  // Sym(3) on Z_3 has only the 3-cycle subgroup.
  GroupContext line(3, 1);
  EXPECT_EQ(regular_elem_abelian_subgroups(
                PermGroup::generate(3, {cycle(3, {0, 1}), cycle(3, {0, 1, 2})}), line)
                .size(),
            1u);
}

TEST(Conjugacy, FindsConjugatorInSymmetricGroup) {
  const PermGroup s5 = PermGroup::generate(5, {cycle(5, {0, 1}), cycle(5, {0, 1, 2, 3, 4})});
  const PermGroup k1 = PermGroup::generate(5, {cycle(5, {0, 1, 2})});
  const PermGroup k2 = PermGroup::generate(5, {cycle(5, {2, 4, 3})});
  const auto c = subgroup_conjugacy(s5, k1, k2);
  ASSERT_TRUE(c.has_value());
  for (const Permutation& g : k1.generators()) EXPECT_TRUE(k2.contains(g.conjugate_by(*c)));
  const PermGroup k3 = PermGroup::generate(5, {cycle(5, {0, 1}), cycle(5, {2, 3})});
  EXPECT_FALSE(subgroup_conjugacy(s5, k1, k3).has_value());
}

TEST(CentralizerSubspace, MatchesFixedVectors) {
  GroupContext ctx(3, 3);
  const std::vector<AutMatrix> mats = {AutMatrix(Matrix(3, 3, {1, 0, 1, 0, 1, 0, 0, 0, 1})),
                                       AutMatrix(Matrix(3, 3, {1, 0, 0, 0, 1, 1, 0, 0, 1}))};
  const Subspace c = centralizer_subspace(ctx, mats);
  ElementSet expected;
  for (Index h = 0; h < ctx.order(); ++h)
    if (mats[0].apply_index(ctx, h) == h && mats[1].apply_index(ctx, h) == h) expected.push_back(h);
  EXPECT_EQ(c.elements(ctx), expected);
}

}  // namespace
}  // namespace sring
