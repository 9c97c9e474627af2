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

#include "sring/analysis.h"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

#include "linear_match.h"

namespace sring {
namespace {

constexpr Index kMaxCayleyOrder = 2187;

std::vector<std::vector<Point>> classes_as_points(const SRing& a) {
  std::vector<std::vector<Point>> out;
  out.reserve(a.rank());
  for (const auto& cls : a.classes())
    out.emplace_back(cls.begin(), cls.end());
  return out;
}

std::vector<Permutation> translation_generators(const GroupContext& ctx) {
  std::vector<Permutation> gens;
  for (int k = 0; k < ctx.n(); ++k) gens.push_back(translation(ctx, ctx.unit(k)));
  return gens;
}

}  // namespace

PairColoring cayley_coloring(const SRing& a) {
  const GroupContext& ctx = a.context();
  if (ctx.order() > kMaxCayleyOrder)
    throw LimitError("Cayley coloring limited to 2187 points");
  PairColoring out;
  out.degree = ctx.order();
  out.num_colors = static_cast<std::uint32_t>(a.rank());
  out.colors.resize(std::size_t{out.degree} * out.degree);
  for (Index u = 0; u < ctx.order(); ++u)
    for (Index v = 0; v < ctx.order(); ++v)
      out.colors[std::size_t{u} * out.degree + v] = a.class_of(ctx.sub(v, u));
  return out;
}

PermGroup aut_group(const SRing& a, const Deadline& deadline) {
  return coloring_automorphisms(cayley_coloring(a), {}, deadline);
}

bool is_schurian(const SRing& a, const PermGroup& aut) {
  PermGroup stab = aut.point_stabilizer(0);
  return orbits(aut.degree(), stab.generators()) == classes_as_points(a);
}

bool is_schurian(const SRing& a, const Deadline& deadline) {
  return is_schurian(a, aut_group(a, deadline));
}

bool is_wedge_witness(const SRing& a, const Subspace& e, const Subspace& f) {
  const GroupContext& ctx = a.context();
  if (!e.contains(f) || !is_a_subgroup(a, e) || !is_a_subgroup(a, f))
    return false;
  std::vector<Index> shifts;
  for (const Vector& b : f.basis()) shifts.push_back(ctx.to_index(b));
  for (ClassId id = 0; id < a.rank(); ++id) {
    const ElementSet& cls = a.classes()[id];
    if (e.contains_index(ctx, cls.front())) continue;
    for (Index t : cls)
      for (Index s : shifts)
        if (a.class_of(ctx.add(t, s)) != id) return false;
  }
  return true;
}

std::optional<WedgeWitness> decomposability_witness(const SRing& a) {
  std::vector<Subspace> subs = a_subgroups(a);
  std::vector<Subspace> descending = subs;
  std::stable_sort(descending.begin(), descending.end(),
                   [](const Subspace& x, const Subspace& y) {
                     return x.dim() > y.dim();
                   });
  const int n = a.context().n();
  for (const Subspace& e : descending) {
    if (e.dim() == n) continue;
    for (const Subspace& f : subs) {
      if (f.dim() == 0 || f.dim() > e.dim()) continue;
      if (is_wedge_witness(a, e, f)) return WedgeWitness{e, f};
    }
  }
  return std::nullopt;
}

Fingerprint fingerprint(const SRing& a) {
  Fingerprint fp;
  fp.rank = a.rank();
  fp.class_sizes = a.size_profile();
  std::sort(fp.class_sizes.begin(), fp.class_sizes.end());
  fp.subgroups_by_dim.assign(a.context().n() + 1, 0);
  for (const Subspace& s : a_subgroups(a)) ++fp.subgroups_by_dim[s.dim()];
  fp.decomposable = decomposability_witness(a).has_value();
  return fp;
}

std::optional<AutMatrix> cayley_isomorphic(const SRing& a, const SRing& b,
                                           const Deadline& deadline) {
  const GroupContext& ctx = a.context();
  require_same_context(ctx, b.context());
  if (a.rank() != b.rank()) return std::nullopt;
  auto sizes_a = a.size_profile();
  auto sizes_b = b.size_profile();
  std::sort(sizes_a.begin(), sizes_a.end());
  std::sort(sizes_b.begin(), sizes_b.end());
  if (sizes_a != sizes_b) return std::nullopt;

  internal::LinearMatcher matcher(ctx, a.class_map(), b.class_map(), a.rank(),
                                  false, deadline);
  std::optional<AutMatrix> found;
  matcher.run([&](const std::vector<Index>& images) {
    found = matcher.to_matrix(images);
    return false;
  });
  return found;
}

std::vector<AutMatrix> cayley_automorphisms(const SRing& a,
                                            const Deadline& deadline) {
  internal::LinearMatcher matcher(a.context(), a.class_map(), a.class_map(),
                                  a.rank(), true, deadline);
  std::vector<AutMatrix> out;
  matcher.run([&](const std::vector<Index>& images) {
    out.push_back(matcher.to_matrix(images));
    return true;
  });
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Subgroups X with H_R <= X <= Aut(A), described by extra generators.
class TeqSearch {
 public:
  TeqSearch(const SRing& a, const Deadline& deadline)
      : ctx_(a.context()), deadline_(deadline),
        translations_(translation_generators(ctx_)) {}

  struct Extension {
    PermGroup group;
    std::vector<Permutation> stabilizer;  // generators of X_0
    std::size_t orbit_count = 0;
  };

  Extension extend(std::span<const Permutation> extra) const {
    std::vector<Permutation> gens = translations_;
    gens.insert(gens.end(), extra.begin(), extra.end());
    const Point origin = 0;
    PermGroup x = PermGroup::generate(ctx_.order(), std::move(gens),
                                      std::span(&origin, 1), deadline_);
    Extension out{x, x.stabilizer_generators(1), 0};
    out.orbit_count = orbits(ctx_.order(), out.stabilizer).size();
    return out;
  }

 private:
  const GroupContext& ctx_;
  const Deadline& deadline_;
  std::vector<Permutation> translations_;
};

}  // namespace

bool teq_minimal(const SRing& a, const Deadline& deadline,
                 std::uint64_t limit) {
  const GroupContext& ctx = a.context();
  const PermGroup aut = aut_group(a, deadline);
  const PermGroup stab = aut.point_stabilizer(0, deadline);
  const std::size_t target = orbits(ctx.order(), stab.generators()).size();
  if (stab.order() == 1) return true;
  TeqSearch search(a, deadline);
  // Cyclic extensions are cheap enough to try on stabilizers far beyond
  // `limit`; only the full subgroup walk is bounded by it.
  const std::vector<Permutation> g0 =
      stab.elements(std::max(limit, kDefaultEnumerationLimit));

  // One generator per cyclic subgroup of G_0.
  std::vector<Permutation> cyclic;
  std::set<Permutation> seen;
  for (const Permutation& s : g0) {
    if (s.is_identity() || seen.count(s)) continue;
    cyclic.push_back(s);
    const std::uint64_t ord = s.order();
    Permutation power = s;
    for (std::uint64_t k = 1; k < ord; ++k, power = power * s)
      if (std::gcd(k, ord) == 1) seen.insert(power);
  }

  std::vector<std::vector<Permutation>> proper;
  for (const Permutation& s : cyclic) {
    deadline.check("teq search");
    std::vector<Permutation> extra = {s};
    TeqSearch::Extension ext = search.extend(extra);
    if (ext.group.order() == aut.order()) continue;
    if (ext.orbit_count == target) return false;
    proper.push_back(std::move(extra));
  }

  if (!stab.order_fits(limit))
    throw LimitError("stabilizer of 0 in Aut(A) exceeds the teq search limit");
  using Key = std::vector<Permutation>;
  auto key_of = [&](const TeqSearch::Extension& ext) {
    Key key = PermGroup::generate(ctx.order(), ext.stabilizer).elements(limit);
    std::sort(key.begin(), key.end());
    return key;
  };
  std::set<Key> visited;
  std::deque<std::vector<Permutation>> queue;
  for (auto& extra : proper)
    if (visited.insert(key_of(search.extend(extra))).second)
      queue.push_back(std::move(extra));
  while (!queue.empty()) {
    std::vector<Permutation> base = std::move(queue.front());
    queue.pop_front();
    const PermGroup current = search.extend(base).group;
    for (const Permutation& s : cyclic) {
      deadline.check("teq search");
      if (current.contains(s)) continue;
      std::vector<Permutation> extra = base;
      extra.push_back(s);
      TeqSearch::Extension ext = search.extend(extra);
      if (ext.group.order() == aut.order()) continue;
      if (ext.orbit_count == target) return false;
      if (visited.insert(key_of(ext)).second)
        queue.push_back(std::move(extra));
    }
  }
  return true;
}

PermGroup kernel_on_quotient(const SRing& a, const Subspace& w,
                             const Deadline& deadline) {
  const GroupContext& ctx = a.context();
  if (!is_a_subgroup(a, w))
    throw InputError("kernel_on_quotient: W is not an A-subgroup");
  QuotientMap quotient(ctx, w);
  std::vector<std::uint32_t> coset(ctx.order());
  for (Index h = 0; h < ctx.order(); ++h) coset[h] = quotient.project(h);
  return coloring_automorphisms(cayley_coloring(a), coset, deadline);
}

}  // namespace sring
