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

#include "sring/sring.h"

#include <algorithm>
#include <string>

namespace sring {

std::string to_string(Verdict::Failure f) {
  switch (f) {
    case Verdict::Failure::kNone: return "none";
    case Verdict::Failure::kNotPartition: return "not-a-partition";
    case Verdict::Failure::kIdentityClass: return "identity-class";
    case Verdict::Failure::kInverseClosure: return "inverse-closure";
    case Verdict::Failure::kConvolution: return "convolution";
  }
  return "unknown";
}

Partition normalize_partition(Partition partition) {
  partition.erase(std::remove_if(partition.begin(), partition.end(),
                                 [](const ElementSet& s) { return s.empty(); }),
                  partition.end());
  for (auto& cls : partition) std::sort(cls.begin(), cls.end());
  std::sort(partition.begin(), partition.end(),
            [](const ElementSet& a, const ElementSet& b) { return a[0] < b[0]; });
  return partition;
}

Verdict verify_sring(const GroupContext& ctx, const Partition& partition) {
  Verdict v;
  const Index order = ctx.order();
  std::vector<std::int64_t> owner(order, -1);
  for (std::size_t c = 0; c < partition.size(); ++c) {
    if (partition[c].empty()) {
      v.failure = Verdict::Failure::kNotPartition;
      v.message = "empty class";
      return v;
    }
    for (Index h : partition[c]) {
      if (h >= order || owner[h] >= 0) {
        v.failure = Verdict::Failure::kNotPartition;
        v.message = h >= order ? "element " + std::to_string(h) + " out of range"
                               : "element " + std::to_string(h) + " repeated";
        v.witness = {h};
        return v;
      }
      owner[h] = static_cast<std::int64_t>(c);
    }
  }
  for (Index h = 0; h < order; ++h)
    if (owner[h] < 0) {
      v.failure = Verdict::Failure::kNotPartition;
      v.message = "element " + std::to_string(h) + " missing";
      v.witness = {h};
      return v;
    }
  if (partition[owner[0]].size() != 1) {
    v.failure = Verdict::Failure::kIdentityClass;
    v.message = "0 is not a singleton class";
    return v;
  }
  for (const auto& cls : partition) {
    const auto target = owner[ctx.neg(cls[0])];
    for (Index h : cls)
      if (owner[ctx.neg(h)] != target || partition[target].size() != cls.size()) {
        v.failure = Verdict::Failure::kInverseClosure;
        v.message = "negation of the class of " + std::to_string(cls[0]) +
                    " is not a class";
        v.witness = {cls[0], h};
        return v;
      }
  }
  std::vector<std::uint32_t> count(order);
  for (std::size_t i = 0; i < partition.size(); ++i) {
    for (std::size_t j = i; j < partition.size(); ++j) {
      std::fill(count.begin(), count.end(), 0);
      for (Index a : partition[i])
        for (Index b : partition[j]) ++count[ctx.add(a, b)];
      for (const auto& cls : partition) {
        const std::uint32_t first = count[cls[0]];
        for (Index h : cls)
          if (count[h] != first) {
            v.failure = Verdict::Failure::kConvolution;
            v.message = "product of classes " + std::to_string(i) + " and " +
                        std::to_string(j) + " is not constant on the class of " +
                        std::to_string(cls[0]);
            v.witness = {static_cast<Index>(i), static_cast<Index>(j), cls[0], h};
            return v;
          }
      }
    }
  }
  return v;
}

SRing::SRing(GroupContext ctx, Partition classes)
    : ctx_(std::move(ctx)), classes_(std::move(classes)) {
  class_of_.assign(ctx_.order(), 0);
  for (std::size_t c = 0; c < classes_.size(); ++c)
    for (Index h : classes_[c]) class_of_[h] = static_cast<ClassId>(c);
}

SRing SRing::create(const GroupContext& ctx, Partition partition) {
  partition = normalize_partition(std::move(partition));
  Verdict v = verify_sring(ctx, partition);
  if (!v.ok()) throw InvalidSRing(std::move(v));
  return SRing(ctx, std::move(partition));
}

SRing SRing::full_group_algebra(const GroupContext& ctx) {
  Partition p;
  for (Index h = 0; h < ctx.order(); ++h) p.push_back({h});
  return SRing(ctx, std::move(p));
}

SRing SRing::rank_two(const GroupContext& ctx) {
  Partition p = {{0}, {}};
  for (Index h = 1; h < ctx.order(); ++h) p[1].push_back(h);
  return create(ctx, std::move(p));
}

std::vector<std::size_t> SRing::size_profile() const {
  std::vector<std::size_t> sizes;
  for (const auto& c : classes_) sizes.push_back(c.size());
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

std::uint64_t structure_constant(const SRing& a, ClassId i, ClassId j, ClassId k) {
  if (i >= a.rank() || j >= a.rank() || k >= a.rank())
    throw InputError("class id out of range");
  const GroupContext& ctx = a.context();
  const Index target = a.classes()[k][0];
  std::uint64_t count = 0;
  for (Index x : a.classes()[i])
    if (a.class_of(ctx.sub(target, x)) == j) ++count;
  return count;
}

Subspace radical(const GroupContext& ctx, std::span<const Index> set) {
  std::vector<char> in(ctx.order(), 0);
  for (Index s : set) in.at(s) = 1;
  std::vector<Index> members;
  for (Index h = 0; h < ctx.order(); ++h) {
    bool stable = true;
    for (Index s : set)
      if (!in[ctx.add(s, h)]) {
        stable = false;
        break;
      }
    if (stable) members.push_back(h);
  }
  return Subspace::span_of_indices(ctx, members);
}

Subspace span_subgroup(const GroupContext& ctx, std::span<const Index> set) {
  return Subspace::span_of_indices(ctx, set);
}

Subspace thin_radical(const SRing& a) {
  std::vector<Index> singles;
  for (const auto& c : a.classes())
    if (c.size() == 1) singles.push_back(c[0]);
  Subspace s = Subspace::span_of_indices(a.context(), singles);
  if (s.order() != singles.size())
    throw InputError("singleton classes do not form a subgroup");
  return s;
}

bool is_union_of_classes(const SRing& a, std::span<const Index> set) {
  std::vector<char> in(a.context().order(), 0);
  for (Index h : set) in.at(h) = 1;
  for (Index h : set)
    for (Index x : a.classes()[a.class_of(h)])
      if (!in[x]) return false;
  return true;
}

bool is_a_subgroup(const SRing& a, const Subspace& k) {
  return is_union_of_classes(a, k.elements(a.context()));
}

std::vector<Subspace> a_subgroups(const SRing& a) {
  std::vector<Subspace> out;
  for (auto& s : enumerate_all_subspaces(a.context()))
    if (is_a_subgroup(a, s)) out.push_back(std::move(s));
  return out;
}

bool is_p_sring(const SRing& a) {
  const std::size_t p = static_cast<std::size_t>(a.context().p());
  for (const auto& c : a.classes()) {
    std::size_t s = c.size();
    while (s % p == 0) s /= p;
    if (s != 1) return false;
  }
  return true;
}

std::vector<Subspace> subgroup_chain(const SRing& a) {
  if (!is_p_sring(a)) throw InputError("subgroup chain requires a p-S-ring");
  const auto subs = a_subgroups(a);
  std::vector<Subspace> chain = {Subspace::trivial(a.context())};
  while (chain.back().dim() < a.context().n()) {
    const Subspace& cur = chain.back();
    auto next = std::find_if(subs.begin(), subs.end(), [&](const Subspace& s) {
      return s.dim() == cur.dim() + 1 && s.contains(cur);
    });
    if (next == subs.end())
      throw InputError("no A-subgroup of index p above the current one");
    chain.push_back(*next);
  }
  return chain;
}

std::size_t coset_intersection_profile(const SRing& a, const Subspace& k,
                                       ClassId t) {
  if (t >= a.rank()) throw InputError("class id out of range");
  if (!is_a_subgroup(a, k)) throw InputError("subgroup is not an A-subgroup");
  const GroupContext& ctx = a.context();
  const ElementSet members = k.elements(ctx);
  std::optional<std::size_t> value;
  for (Index h : a.classes()[t]) {
    std::size_t count = 0;
    for (Index x : members) count += a.class_of(ctx.add(x, h)) == t;
    if (value && *value != count)
      throw InputError("coset intersection sizes are not constant");
    value = count;
  }
  return *value;
}

}  // namespace sring
