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

#include "sring/build.h"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

namespace sring {
namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }
  Partition groups() {
    std::map<std::size_t, ElementSet> by_root;
    for (std::size_t x = 0; x < parent_.size(); ++x)
      by_root[find(x)].push_back(static_cast<Index>(x));
    Partition out;
    for (auto& [root, members] : by_root) out.push_back(std::move(members));
    return out;
  }

 private:
  std::vector<std::size_t> parent_;
};

void unite_set(UnionFind& uf, std::span<const Index> set) {
  for (std::size_t i = 1; i < set.size(); ++i) uf.unite(set[0], set[i]);
}

GroupContext ambient_of(const Subspace& s) {
  return GroupContext(s.p(), s.ambient_rank());
}

// Relabels classes by first occurrence so that equal keys share an id.
template <typename Key>
std::uint32_t relabel(const std::vector<Key>& keys, std::vector<std::uint32_t>& id) {
  std::map<Key, std::uint32_t> seen;
  for (std::size_t h = 0; h < keys.size(); ++h) {
    auto [it, inserted] = seen.emplace(keys[h], static_cast<std::uint32_t>(seen.size()));
    id[h] = it->second;
  }
  return static_cast<std::uint32_t>(seen.size());
}

}  // namespace

SRing transitivity_module(const GroupContext& ctx,
                          std::span<const AutMatrix> gens) {
  UnionFind uf(ctx.order());
  for (const auto& g : gens) {
    if (g.n() != ctx.n() || g.p() != ctx.p())
      throw InputError("matrix context mismatch");
    for (Index h = 0; h < ctx.order(); ++h) uf.unite(h, g.apply_index(ctx, h));
  }
  return SRing::create(ctx, uf.groups());
}

SRing generated_sring(const GroupContext& ctx, std::span<const Index> set) {
  const ElementSet copy(set.begin(), set.end());
  return generated_sring(ctx, std::span(&copy, 1));
}

SRing generated_sring(const GroupContext& ctx,
                      std::span<const ElementSet> sets) {
  const Index order = ctx.order();
  // Start from membership in each set and in its negative.
  std::vector<std::vector<char>> start(order);
  for (std::size_t k = 0; k < sets.size(); ++k) {
    std::vector<char> in(order, 0);
    for (Index s : sets[k]) {
      if (s >= order) throw InputError("element index out of range");
      in[s] = 1;
    }
    for (Index h = 1; h < order; ++h) {
      start[h].push_back(in[h]);
      start[h].push_back(in[ctx.neg(h)]);
    }
  }
  start[0] = {2};
  std::vector<std::uint32_t> id(order);
  std::uint32_t count = relabel(start, id);

  while (true) {
    // Negation closure.
    while (true) {
      std::vector<std::pair<std::uint32_t, std::uint32_t>> keys(order);
      for (Index h = 0; h < order; ++h) keys[h] = {id[h], id[ctx.neg(h)]};
      std::uint32_t next = relabel(keys, id);
      if (next == count) break;
      count = next;
    }
    // Split by the full vector of product counts.
    std::vector<ElementSet> cls(count);
    for (Index h = 0; h < order; ++h) cls[id[h]].push_back(h);
    std::vector<std::vector<std::uint64_t>> sig(order);
    std::vector<std::uint32_t> cnt(order);
    for (std::uint32_t i = 0; i < count; ++i)
      for (std::uint32_t j = i; j < count; ++j) {
        std::fill(cnt.begin(), cnt.end(), 0);
        for (Index a : cls[i])
          for (Index b : cls[j]) ++cnt[ctx.add(a, b)];
        for (Index h = 0; h < order; ++h)
          if (cnt[h] != 0)
            sig[h].push_back((std::uint64_t{i} << 48) | (std::uint64_t{j} << 32) | cnt[h]);
      }
    std::vector<std::pair<std::uint32_t, std::vector<std::uint64_t>>> keys(order);
    for (Index h = 0; h < order; ++h) keys[h] = {id[h], std::move(sig[h])};
    std::uint32_t next = relabel(keys, id);
    if (next == count) break;
    count = next;
  }
  Partition p(count);
  for (Index h = 0; h < order; ++h) p[id[h]].push_back(h);
  return SRing::create(ctx, std::move(p));
}

SRing quotient_sring(const SRing& a, const Subspace& k) {
  if (!is_a_subgroup(a, k)) throw InputError("subgroup is not an A-subgroup");
  QuotientMap q(a.context(), k);
  UnionFind uf(q.target().order());
  for (const auto& cls : a.classes()) {
    const Index first = q.project(cls[0]);
    for (Index h : cls) uf.unite(first, q.project(h));
  }
  return SRing::create(q.target(), uf.groups());
}

SRing induced_sring(const SRing& a, const Subspace& k) {
  if (!is_a_subgroup(a, k)) throw InputError("subgroup is not an A-subgroup");
  SubspaceEmbedding e(a.context(), k);
  Partition p;
  for (const auto& cls : a.classes()) {
    if (!k.contains_index(a.context(), cls[0])) continue;
    ElementSet local;
    for (Index h : cls) local.push_back(e.to_local(h));
    p.push_back(std::move(local));
  }
  return SRing::create(e.local(), std::move(p));
}

SRing intersect_srings(const SRing& a, const SRing& b) {
  require_same_context(a.context(), b.context());
  UnionFind uf(a.context().order());
  for (const auto& cls : a.classes()) unite_set(uf, cls);
  for (const auto& cls : b.classes()) unite_set(uf, cls);
  return SRing::create(a.context(), uf.groups());
}

SRing tensor_sring(const SRing& ae, const SRing& af, const Subspace& e,
                   const Subspace& f) {
  const GroupContext ctx = ambient_of(e);
  if (subspace_intersection(e, f).dim() != 0 || subspace_sum(e, f).dim() != ctx.n())
    throw InputError("subspaces do not split the group as a direct sum");
  SubspaceEmbedding ee(ctx, e), fe(ctx, f);
  require_same_context(ae.context(), ee.local());
  require_same_context(af.context(), fe.local());
  Partition p;
  for (const auto& r : ae.classes())
    for (const auto& s : af.classes()) {
      ElementSet cls;
      for (Index x : r)
        for (Index y : s) cls.push_back(ctx.add(ee.embed(x), fe.embed(y)));
      p.push_back(std::move(cls));
    }
  return SRing::create(ctx, std::move(p));
}

SRing wedge_sring(const SRing& ae, const SRing& aq, const Subspace& e,
                  const Subspace& f) {
  const GroupContext ctx = ambient_of(e);
  if (!e.contains(f)) throw InputError("wedge requires F <= E");
  SubspaceEmbedding ee(ctx, e);
  QuotientMap qf(ctx, f);
  require_same_context(ae.context(), ee.local());
  require_same_context(aq.context(), qf.target());

  // F inside the coordinates of E must be an ae-subgroup.
  std::vector<Index> f_local;
  for (Index h : f.elements(ctx)) f_local.push_back(ee.to_local(h));
  std::sort(f_local.begin(), f_local.end());
  if (!is_union_of_classes(ae, f_local))
    throw InputError("F is not a subgroup of the inner S-ring");

  // Image of E in H/F.
  std::vector<char> in_e_mod_f(qf.target().order(), 0);
  for (Index h : e.elements(ctx)) in_e_mod_f[qf.project(h)] = 1;

  // Quotient of ae by F, expressed in H/F indices.
  UnionFind uf(qf.target().order());
  for (const auto& cls : ae.classes()) {
    const Index first = qf.project(ee.embed(cls[0]));
    for (Index x : cls) uf.unite(first, qf.project(ee.embed(x)));
  }
  Partition from_inner;
  for (auto& g : uf.groups())
    if (in_e_mod_f[g[0]]) from_inner.push_back(std::move(g));
  Partition from_outer;
  for (const auto& cls : aq.classes()) {
    const bool inside = in_e_mod_f[cls[0]];
    for (Index q : cls)
      if (static_cast<bool>(in_e_mod_f[q]) != inside)
        throw InputError("class of " + std::to_string(cls[0]) +
                         " in the outer S-ring straddles E/F");
    if (inside) from_outer.push_back(cls);
  }
  from_inner = normalize_partition(std::move(from_inner));
  from_outer = normalize_partition(std::move(from_outer));
  if (from_inner != from_outer) {
    std::size_t i = 0;
    while (i < from_inner.size() && i < from_outer.size() &&
           from_inner[i] == from_outer[i])
      ++i;
    const Index witness = i < from_inner.size() ? from_inner[i][0] : from_outer[i][0];
    throw InputError("inner quotient and outer S-ring differ at the class of " +
                     std::to_string(witness) + " in H/F");
  }

  Partition p;
  for (const auto& cls : ae.classes()) {
    ElementSet lifted;
    for (Index x : cls) lifted.push_back(ee.embed(x));
    p.push_back(std::move(lifted));
  }
  std::vector<std::int64_t> outer_class(qf.target().order(), -1);
  for (std::size_t c = 0; c < aq.rank(); ++c)
    if (!in_e_mod_f[aq.classes()[c][0]])
      for (Index q : aq.classes()[c]) outer_class[q] = static_cast<std::int64_t>(c);
  std::map<std::int64_t, ElementSet> outside;
  for (Index h = 0; h < ctx.order(); ++h) {
    const auto c = outer_class[qf.project(h)];
    if (c >= 0) outside[c].push_back(h);
  }
  for (auto& [c, cls] : outside) p.push_back(std::move(cls));
  return SRing::create(ctx, std::move(p));
}

SRing wreath_sring(const SRing& ae, const SRing& aq, const Subspace& e) {
  return wedge_sring(ae, aq, e, e);
}

}  // namespace sring
