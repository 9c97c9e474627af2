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

#include <algorithm>
#include <random>
#include <set>

#include "oracles.h"
#include "sring/gfp.h"

namespace sring {
namespace {

ElementSet span_by_closure(const GroupContext& ctx, const ElementSet& gens) {
  std::set<Index> group = {0};
  bool grew = true;
  while (grew) {
    grew = false;
    for (Index g : gens)
      for (Index x : ElementSet(group.begin(), group.end()))
        grew |= group.insert(ctx.add(x, g)).second;
  }
  return {group.begin(), group.end()};
}

TEST(GroupContext, IndexIsLittleEndian) {
  GroupContext ctx(3, 3);
  EXPECT_EQ(ctx.order(), 27u);
  EXPECT_EQ(ctx.to_index(std::vector<int>{1, 2, 0}), 7u);
  EXPECT_EQ(ctx.to_vector(19), (Vector{1, 0, 2}));
  for (Index i = 0; i < ctx.order(); ++i) EXPECT_EQ(ctx.to_index(ctx.to_vector(i)), i);
}

TEST(GroupContext, ArithmeticMatchesCoordinates) {
  GroupContext ctx(5, 2);
  for (Index a = 0; a < ctx.order(); ++a)
    for (Index b = 0; b < ctx.order(); ++b) {
      Vector va = ctx.to_vector(a), vb = ctx.to_vector(b);
      for (int k = 0; k < 2; ++k) va[k] = (va[k] + vb[k]) % 5;
      EXPECT_EQ(ctx.add(a, b), ctx.to_index(va));
    }
  EXPECT_EQ(ctx.add(3, ctx.neg(3)), 0u);
}

TEST(GroupContext, RejectsBadModulus) {
  EXPECT_THROW(GroupContext(4, 2), InputError);
  EXPECT_THROW(GroupContext(2, 2), InputError);
  EXPECT_THROW(GroupContext(3, 9), InputError);
}

TEST(Subspace, CountsAgreeWithGaussianBinomial) {
  for (auto [p, n] : {std::pair{3, 2}, {3, 3}, {5, 2}, {3, 4}}) {
    GroupContext ctx(p, n);
    std::uint64_t total = 0;
    for (int k = 0; k <= n; ++k) {
      const auto subs = enumerate_subspaces(ctx, k);
      EXPECT_EQ(subs.size(), gaussian_binomial(p, n, k)) << p << " " << n << " " << k;
      total += subs.size();
    }
    EXPECT_EQ(enumerate_all_subspaces(ctx).size(), total);
  }
  EXPECT_EQ(gaussian_binomial(3, 3, 1), 13u);
  EXPECT_EQ(gaussian_binomial(3, 4, 2), 130u);
}

TEST(Subspace, EnumerationMatchesBruteForceSubgroups) {
  GroupContext ctx(3, 3);
  std::set<ElementSet> from_library;
  for (const Subspace& s : enumerate_all_subspaces(ctx)) from_library.insert(s.elements(ctx));
  EXPECT_EQ(from_library, oracle::all_subgroups(ctx));
}

TEST(Subspace, EqualSpansHaveIdenticalBases) {
  GroupContext ctx(3, 3);
  const Subspace a = Subspace::span(ctx, std::vector<Vector>{{1, 1, 0}, {0, 1, 2}});
  const Subspace b = Subspace::span(ctx, std::vector<Vector>{{1, 2, 2}, {2, 0, 2}, {1, 1, 0}});
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.dim(), 2);
}

TEST(Subspace, SumAndIntersectionAgreeWithElementSets) {
  GroupContext ctx(3, 3);
  std::mt19937_64 rng(11);
  const auto all = enumerate_all_subspaces(ctx);
  for (int trial = 0; trial < 200; ++trial) {
    const Subspace& a = all[rng() % all.size()];
    const Subspace& b = all[rng() % all.size()];
    const ElementSet ea = a.elements(ctx), eb = b.elements(ctx);
    ElementSet meet;
    std::set_intersection(ea.begin(), ea.end(), eb.begin(), eb.end(),
                          std::back_inserter(meet));
    EXPECT_EQ(subspace_intersection(a, b).elements(ctx), meet);
    ElementSet gens = ea;
    gens.insert(gens.end(), eb.begin(), eb.end());
    EXPECT_EQ(subspace_sum(a, b).elements(ctx), span_by_closure(ctx, gens));
    EXPECT_EQ(subspace_lattice_ops(a, b).contains,
              std::includes(ea.begin(), ea.end(), eb.begin(), eb.end()));
  }
}

TEST(Subspace, ReduceGivesCosetRepresentative) {
  GroupContext ctx(3, 3);
  const Subspace k = Subspace::span(ctx, std::vector<Vector>{{1, 2, 0}});
  for (Index h = 0; h < ctx.order(); ++h) {
    const Vector r = k.reduce(ctx.to_vector(h));
    EXPECT_TRUE(k.contains_index(ctx, ctx.sub(h, ctx.to_index(r))));
    for (Index m : k.elements(ctx))
      EXPECT_EQ(k.reduce(ctx.to_vector(ctx.add(h, m))), r);
  }
}

TEST(QuotientMap, ProjectionIsAHomomorphismWithKernelK) {
  GroupContext ctx(3, 3);
  const Subspace k = Subspace::span(ctx, std::vector<Vector>{{0, 1, 1}});
  QuotientMap q(ctx, k);
  EXPECT_EQ(q.target().order(), 9u);
  for (Index a = 0; a < ctx.order(); ++a) {
    EXPECT_EQ(q.project(a) == 0, k.contains_index(ctx, a));
    EXPECT_EQ(q.project(q.lift(q.project(a))), q.project(a));
    for (Index b = 0; b < ctx.order(); ++b)
      EXPECT_EQ(q.project(ctx.add(a, b)), q.target().add(q.project(a), q.project(b)));
  }
}

TEST(SubspaceEmbedding, RoundTrips) {
  GroupContext ctx(5, 3);
  const Subspace k = Subspace::span(ctx, std::vector<Vector>{{1, 0, 3}, {0, 1, 1}});
  SubspaceEmbedding e(ctx, k);
  EXPECT_EQ(e.local().order(), 25u);
  for (Index i = 0; i < e.local().order(); ++i) EXPECT_EQ(e.to_local(e.embed(i)), i);
  EXPECT_THROW(e.to_local(ctx.unit(2)), InputError);
}

TEST(Matrix, DeterminantAndInverse) {
  const Matrix x(3, 3, {1, 1, 0, 0, 1, 1, 0, 0, 1});
  EXPECT_EQ(x.determinant(), 1);
  const auto inv = x.inverse();
  ASSERT_TRUE(inv.has_value());
  EXPECT_EQ(x * *inv, Matrix::identity(3, 3));
  const Matrix singular(3, 2, {1, 2, 2, 1});
  EXPECT_EQ(singular.determinant(), 0);
  EXPECT_FALSE(singular.inverse().has_value());
  EXPECT_THROW(AutMatrix{singular}, InputError);
}

TEST(Matrix, GeneralLinearOrder) {
  GroupContext ctx(3, 2);
  EXPECT_EQ(gl_order(ctx), 48u);
  EXPECT_EQ(oracle::general_linear(3, 2).size(), 48u);
  EXPECT_EQ(gl_order(GroupContext(3, 3)), 11232u);
}

TEST(Matrix, UnitriangularGroup) {
  GroupContext ctx(3, 3);
  const auto ut = unitriangular_group(ctx);
  EXPECT_EQ(ut.size(), 27u);
  for (const AutMatrix& m : ut) {
    EXPECT_EQ(m.matrix().determinant(), 1);
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < r; ++c) EXPECT_EQ(m.matrix().at(r, c), 0);
  }
  EXPECT_THROW(unitriangular_group(GroupContext(3, 5)), LimitError);
}

TEST(Matrix, FixedSubspace) {
  GroupContext ctx(3, 3);
  const AutMatrix jordan(Matrix(3, 3, {1, 1, 0, 0, 1, 1, 0, 0, 1}));
  // Row vectors: only multiples of e_3 are fixed.
  const Subspace fixed = fixed_subspace(ctx, std::span(&jordan, 1));
  ElementSet expected;
  for (Index h = 0; h < ctx.order(); ++h)
    if (jordan.apply_index(ctx, h) == h) expected.push_back(h);
  EXPECT_EQ(fixed.elements(ctx), expected);
  EXPECT_EQ(fixed.dim(), 1);
}

}  // namespace
}  // namespace sring
