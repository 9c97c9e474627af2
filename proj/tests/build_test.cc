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

#include <map>
#include <random>

#include "oracles.h"
#include "sring/analysis.h"
#include "sring/build.h"
#include "sring/catalog.h"

namespace sring {
namespace {

Subspace units(const GroupContext& ctx, std::vector<int> which) {
  std::vector<Vector> rows;
  for (int k : which) {
    Vector v(ctx.n(), 0);
    v[k] = 1;
    rows.push_back(v);
  }
  return Subspace::span(ctx, rows);
}

SRing wreath_c3_c3() {
  GroupContext ctx(3, 2);
  return SRing::create(ctx, {{0}, {1}, {2}, {3, 4, 5}, {6, 7, 8}});
}

std::map<std::size_t, std::size_t> size_histogram(const SRing& a) {
  std::map<std::size_t, std::size_t> out;
  for (const auto& c : a.classes()) ++out[c.size()];
  return out;
}

ElementSet random_subset(const GroupContext& ctx, std::mt19937_64& rng,
                         std::size_t max_size) {
  const std::size_t size = 1 + rng() % max_size;
  std::set<Index> s;
  while (s.size() < size) s.insert(1 + static_cast<Index>(rng() % (ctx.order() - 1)));
  return {s.begin(), s.end()};
}

TEST(TransitivityModule, Examples) {
  GroupContext ctx(3, 3);
  EXPECT_EQ(transitivity_module(ctx, {}), SRing::full_group_algebra(ctx));
  const SRing ex = exceptional_sring(3);
  EXPECT_EQ(ex.rank(), 11u);
  EXPECT_EQ(size_histogram(ex), (std::map<std::size_t, std::size_t>{{1, 3}, {3, 8}}));
  const SRing ll = ll2_sring(3).ring;
  EXPECT_EQ(ll.rank(), 51u);
  EXPECT_EQ(size_histogram(ll), (std::map<std::size_t, std::size_t>{{1, 27}, {9, 24}}));
}

TEST(TransitivityModule, ClassesAreOrbits) {
  GroupContext ctx(3, 3);
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 20; ++trial) {
    const AutMatrix g = random_unitriangular(3, 3, rng);
    const SRing a = transitivity_module(ctx, std::span(&g, 1));
    EXPECT_TRUE(oracle::is_sring(ctx, a.classes()));
    for (Index h = 0; h < ctx.order(); ++h)
      EXPECT_EQ(a.class_of(h), a.class_of(g.apply_index(ctx, h)));
    EXPECT_TRUE(is_p_sring(a));
  }
}

TEST(GeneratedSring, Examples) {
  GroupContext ctx(3, 2);
  ElementSet all;
  for (Index h = 1; h < ctx.order(); ++h) all.push_back(h);
  EXPECT_EQ(generated_sring(ctx, all).rank(), 2u);

  const SRing one = generated_sring(ctx, ElementSet{1});
  EXPECT_EQ(one.classes(), (Partition{{0}, {1}, {2}, {3, 4, 5, 6, 7, 8}}));

  GroupContext cube(3, 3);
  const SRing ex = exceptional_sring(3);
  const BasicSet orbit = ex.basic_set(ex.class_of(1));
  // The closure of one orbit fuses the classes through e_2 and -e_2; it is
  // a rank-10 coarsening of the exceptional ring.
  const SRing from_orbit = generated_sring(cube, orbit.elements);
  EXPECT_EQ(from_orbit.classes(),
            oracle::weisfeiler_leman_closure(cube, {ElementSet(orbit.elements.begin(),
                                                               orbit.elements.end())}));
  EXPECT_EQ(from_orbit.rank(), 10u);
  for (const auto& t : ex.classes()) EXPECT_TRUE(is_union_of_classes(ex, from_orbit.classes()[from_orbit.class_of(t.front())]));
  // Adding the orbit through e_2 recovers it.
  const BasicSet second = ex.basic_set(ex.class_of(3));
  const std::vector<ElementSet> both = {ElementSet(orbit.elements.begin(), orbit.elements.end()),
                                        ElementSet(second.elements.begin(), second.elements.end())};
  EXPECT_EQ(generated_sring(cube, std::span<const ElementSet>(both)), ex);
}

TEST(GeneratedSring, ZeroIsIgnoredAndRangeChecked) {
  GroupContext ctx(3, 2);
  EXPECT_EQ(generated_sring(ctx, ElementSet{0, 1}), generated_sring(ctx, ElementSet{1}));
  EXPECT_THROW(generated_sring(ctx, ElementSet{9}), InputError);
}

TEST(GeneratedSring, MatchesExhaustiveOracleOverZ3Squared) {
  GroupContext ctx(3, 2);
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    const ElementSet s = random_subset(ctx, rng, 8);
    EXPECT_EQ(generated_sring(ctx, s).classes(), oracle::exhaustive_generated(ctx, s))
        << "trial " << trial;
  }
}

TEST(GeneratedSring, MatchesWeisfeilerLemanOracle) {
  std::mt19937_64 rng(41);
  for (auto [p, n] : {std::pair{3, 2}, {5, 2}, {3, 3}}) {
    GroupContext ctx(p, n);
    for (int trial = 0; trial < 6; ++trial) {
      const ElementSet s = random_subset(ctx, rng, 6);
      EXPECT_EQ(generated_sring(ctx, s).classes(),
                oracle::weisfeiler_leman_closure(ctx, {s}));
    }
  }
}

TEST(GeneratedSring, SeveralSetsMatchWeisfeilerLeman) {
  GroupContext ctx(3, 3);
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 4; ++trial) {
    const std::vector<ElementSet> sets = {random_subset(ctx, rng, 4), random_subset(ctx, rng, 4)};
    const SRing a = generated_sring(ctx, std::span<const ElementSet>(sets));
    EXPECT_EQ(a.classes(), oracle::weisfeiler_leman_closure(ctx, sets));
    for (const auto& s : sets) EXPECT_TRUE(is_union_of_classes(a, s));
  }
}

TEST(QuotientSring, Examples) {
  GroupContext ctx(3, 3);
  const Subspace k = units(ctx, {0});
  EXPECT_EQ(quotient_sring(SRing::full_group_algebra(ctx), k),
            SRing::full_group_algebra(GroupContext(3, 2)));

  const SRing ex = exceptional_sring(3);
  const Subspace w = a_subgroups(ex)[1];
  const SRing q = quotient_sring(ex, w);
  EXPECT_EQ(q.rank(), 5u);
  EXPECT_TRUE(cayley_isomorphic(q, wreath_c3_c3()).has_value());
  EXPECT_TRUE(is_p_sring(q));
  EXPECT_THROW(quotient_sring(ex, units(ctx, {0})), InputError);
}

TEST(QuotientSring, OfWreathIsTheTop) {
  GroupContext ctx(3, 3);
  const Subspace e = units(ctx, {0});
  SubspaceEmbedding embed(ctx, e);
  QuotientMap qm(ctx, e);
  const SRing top = SRing::rank_two(qm.target());
  const SRing wr = wreath_sring(SRing::full_group_algebra(embed.local()), top, e);
  EXPECT_EQ(quotient_sring(wr, e), top);
}

TEST(InducedAndIntersect, Examples) {
  const SRing wr = wreath_c3_c3();
  const GroupContext& ctx = wr.context();
  const Subspace k = units(ctx, {0});
  EXPECT_EQ(induced_sring(wr, k), SRing::full_group_algebra(GroupContext(3, 1)));
  EXPECT_EQ(intersect_srings(wr, wr), wr);
  EXPECT_EQ(intersect_srings(SRing::full_group_algebra(ctx), wr), wr);
  EXPECT_EQ(intersect_srings(wr, SRing::rank_two(ctx)), SRing::rank_two(ctx));
}

TEST(Intersect, ClassesAreMinimalCommonUnions) {
  GroupContext ctx(3, 2);
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 20; ++trial) {
    const SRing a = generated_sring(ctx, random_subset(ctx, rng, 3));
    const SRing b = generated_sring(ctx, random_subset(ctx, rng, 3));
    const SRing c = intersect_srings(a, b);
    EXPECT_TRUE(oracle::is_sring(ctx, c.classes()));
    for (const auto& t : c.classes()) {
      EXPECT_TRUE(is_union_of_classes(a, t));
      EXPECT_TRUE(is_union_of_classes(b, t));
    }
  }
}

TEST(TensorSring, Examples) {
  GroupContext ctx(3, 3);
  const Subspace e = units(ctx, {0, 1});
  const Subspace f = units(ctx, {2});
  SubspaceEmbedding ef(ctx, f);
  const SRing t = tensor_sring(wreath_c3_c3(), SRing::full_group_algebra(ef.local()), e, f);
  EXPECT_EQ(t.rank(), 15u);
  const SRing t2 = tensor_sring(wreath_c3_c3(), SRing::rank_two(ef.local()), e, f);
  EXPECT_EQ(t2.rank(), 10u);
  EXPECT_TRUE(oracle::is_sring(ctx, t2.classes()));
  EXPECT_EQ(tensor_sring(SRing::full_group_algebra(GroupContext(3, 2)),
                         SRing::full_group_algebra(ef.local()), e, f),
            SRing::full_group_algebra(ctx));
  EXPECT_THROW(tensor_sring(wreath_c3_c3(), SRing::full_group_algebra(ef.local()), e,
                            units(ctx, {1})),
               InputError);
}

TEST(WedgeSring, IteratedWreath) {
  GroupContext ctx(3, 3);
  const SRing rows_5 = table1_reference_rings(3)[4];
  EXPECT_EQ(rows_5.rank(), 7u);
  EXPECT_TRUE(oracle::is_sring(ctx, rows_5.classes()));
  const auto witness = decomposability_witness(rows_5);
  ASSERT_TRUE(witness.has_value());
}

TEST(WedgeSring, PlainWreathSizes) {
  GroupContext ctx(3, 3);
  const Subspace e = units(ctx, {0, 1});
  SubspaceEmbedding embed(ctx, e);
  QuotientMap q(ctx, e);
  const SRing wr = wreath_sring(SRing::full_group_algebra(embed.local()),
                                SRing::full_group_algebra(q.target()), e);
  EXPECT_EQ(wr.rank(), 11u);
  EXPECT_EQ(size_histogram(wr), (std::map<std::size_t, std::size_t>{{1, 9}, {9, 2}}));
}

TEST(WedgeSring, DegenerateAndProper) {
  GroupContext ctx(3, 3);
  const SRing ex = exceptional_sring(3);
  const Subspace h = Subspace::full(ctx);
  const Subspace zero = Subspace::trivial(ctx);
  EXPECT_EQ(wedge_sring(ex, ex, h, zero), ex);

  // A proper E/F wedge: E = <e1, e2>, F = <e1>.
  const Subspace e = units(ctx, {0, 1});
  const Subspace f = units(ctx, {0});
  QuotientMap qf(ctx, f);
  const SRing ae = wreath_c3_c3();
  // Over H/F = Z_3^2: wreath with the image of E inside as the bottom.
  const SRing aq = SRing::create(qf.target(), {{0}, {1}, {2}, {3, 4, 5}, {6, 7, 8}});
  const SRing w = wedge_sring(ae, aq, e, f);
  EXPECT_TRUE(oracle::is_sring(ctx, w.classes()));
  EXPECT_TRUE(is_wedge_witness(w, e, f));
  const SRing bad_top = SRing::rank_two(qf.target());
  EXPECT_THROW(wedge_sring(ae, bad_top, e, f), InputError);
}

TEST(Monotonicity, CoarserRingHasLargerAut) {
  GroupContext ctx(3, 2);
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 10; ++trial) {
    const SRing a = generated_sring(ctx, random_subset(ctx, rng, 4));
    const PermGroup fine = aut_group(SRing::full_group_algebra(ctx));
    const PermGroup coarse = aut_group(a);
    EXPECT_TRUE(coarse.contains_group(fine));
  }
}

}  // namespace
}  // namespace sring
