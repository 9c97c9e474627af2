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

#include <algorithm>
#include <deque>
#include <map>

#include "linear_match.h"
#include "sring/analysis.h"
#include "sring/build.h"

namespace sring {
namespace {

// Labelings lam of H with lam(0) = 0 and
//   class(lam(w) - lam(u)) == class(lam(w - u))   for all u, w.
// These are the inverses of the normalized isomorphisms of A. With a
// symmetry group G (fixing 0, acting by post-composition) only one labeling
// per G-orbit is produced.
class LabelSearch {
 public:
  LabelSearch(const SRing& a, const Deadline& deadline)
      : a_(a), ctx_(a.context()), deadline_(deadline),
        label_(ctx_.order(), kUnset), taken_(ctx_.order(), 0),
        required_(ctx_.order(), kUnset) {}

  void set_symmetry(std::vector<Permutation> generators) {
    symmetry_ = std::move(generators);
  }

  // Calls `fn` on each complete labeling until it returns false.
  void run(const std::function<bool(const std::vector<Index>&)>& fn) {
    on_leaf_ = fn;
    label_[0] = 0;
    taken_[0] = 1;
    assigned_ = {0};
    descend(1, symmetry_);
  }

 private:
  static constexpr Index kUnset = static_cast<Index>(-1);

  ClassId cls(Index h) const { return a_.class_of(h); }

  bool require(Index d, ClassId c) {
    if (label_[d] != kUnset) return cls(label_[d]) == c;
    if (required_[d] != kUnset) return required_[d] == c;
    required_[d] = c;
    required_log_.push_back(d);
    return true;
  }

  // Assigns lam(x) = v and propagates pair constraints.
  bool assign(Index x, Index v) {
    label_[x] = v;
    taken_[v] = 1;
    for (Index u : assigned_) {
      if (!require(ctx_.sub(x, u), cls(ctx_.sub(v, label_[u])))) return false;
      if (!require(ctx_.sub(u, x), cls(ctx_.sub(label_[u], v)))) return false;
    }
    assigned_.push_back(x);
    return true;
  }

  bool descend(Index x, const std::vector<Permutation>& symmetry) {
    if ((++ticks_ & 63) == 0) deadline_.check("normalized isomorphism search");
    if (x == ctx_.order()) return on_leaf_(label_);
    const ClassId wanted = required_[x];
    std::vector<Index> candidates;
    for (Index v = 1; v < ctx_.order(); ++v)
      if (!taken_[v] && (wanted == kUnset || cls(v) == wanted))
        candidates.push_back(v);
    if (!symmetry.empty()) {
      // Least point of each orbit of the current stabilizer.
      std::vector<char> is_rep(ctx_.order(), 0);
      for (const auto& orbit : orbits(ctx_.order(), symmetry))
        is_rep[orbit.front()] = 1;
      std::erase_if(candidates, [&](Index v) { return !is_rep[v]; });
    }
    for (Index v : candidates) {
      const std::size_t log_mark = required_log_.size();
      const std::size_t assigned_mark = assigned_.size();
      bool keep_going = true;
      if (assign(x, v)) {
        std::vector<Permutation> next;
        if (!symmetry.empty()) {
          const Point point = static_cast<Point>(v);
          next = PermGroup::generate(ctx_.order(), symmetry,
                                     std::span(&point, 1), deadline_)
                     .stabilizer_generators(1);
        }
        keep_going = descend(x + 1, next.empty() ? kNone : next);
      }
      label_[x] = kUnset;
      taken_[v] = 0;
      assigned_.resize(assigned_mark);
      while (required_log_.size() > log_mark) {
        required_[required_log_.back()] = kUnset;
        required_log_.pop_back();
      }
      if (!keep_going) return false;
    }
    return true;
  }

  inline static const std::vector<Permutation> kNone = {};

  const SRing& a_;
  const GroupContext& ctx_;
  const Deadline& deadline_;
  std::vector<Permutation> symmetry_;
  std::vector<Index> label_;
  std::vector<char> taken_;
  std::vector<Index> assigned_;
  std::vector<ClassId> required_;
  std::vector<Index> required_log_;
  std::function<bool(const std::vector<Index>&)> on_leaf_;
  std::uint64_t ticks_ = 0;
};

Permutation inverse_of_labeling(const std::vector<Index>& label) {
  std::vector<Point> images(label.size());
  for (std::size_t x = 0; x < label.size(); ++x)
    images[label[x]] = static_cast<Point>(x);
  return Permutation(std::move(images));
}

// Element table of a regular group: entry m is the element sending 0 to m.
using RegularKey = std::vector<Point>;

RegularKey regular_key(const std::vector<Permutation>& elements) {
  const std::size_t deg = elements.front().degree();
  RegularKey key(deg * deg);
  for (const Permutation& k : elements)
    std::copy(k.images().begin(), k.images().end(),
              key.begin() + std::size_t{k(0)} * deg);
  return key;
}

CiResult ci_by_regular_subgroups(const SRing& a, const PermGroup& aut,
                                 const Deadline& deadline,
                                 std::uint64_t limit) {
  const GroupContext& ctx = a.context();
  CiResult result;
  result.method = CiResult::Method::kRegularSubgroups;

  // Orbit of H_R under conjugation, with a conjugator for every member.
  const std::vector<Permutation> hr =
      translation_group(ctx).elements();
  std::map<RegularKey, Permutation> orbit;
  std::deque<std::pair<std::vector<Permutation>, Permutation>> queue;
  orbit.emplace(regular_key(hr), Permutation::identity(ctx.order()));
  queue.emplace_back(hr, Permutation::identity(ctx.order()));
  while (!queue.empty()) {
    auto [members, conj] = std::move(queue.front());
    queue.pop_front();
    for (const Permutation& g : aut.generators()) {
      deadline.check("regular subgroup conjugacy");
      std::vector<Permutation> image;
      image.reserve(members.size());
      for (const Permutation& k : members) image.push_back(k.conjugate_by(g));
      Permutation next = conj * g;
      if (orbit.emplace(regular_key(image), next).second)
        queue.emplace_back(std::move(image), std::move(next));
    }
  }

  result.ci = true;
  for (const PermGroup& k :
       regular_elem_abelian_subgroups(aut, ctx, deadline, limit)) {
    RegularWitness witness{k.generators(), std::nullopt};
    auto it = orbit.find(regular_key(k.elements()));
    if (it != orbit.end()) witness.conjugator = it->second;
    else result.ci = false;
    result.regular_subgroups.push_back(std::move(witness));
  }
  return result;
}

CiResult ci_by_isomorphisms(const SRing& a, const PermGroup& aut,
                            const Deadline& deadline) {
  const GroupContext& ctx = a.context();
  CiResult result;
  result.method = CiResult::Method::kNormalizedIsomorphisms;
  result.ci = true;
  LabelSearch search(a, deadline);
  search.set_symmetry(aut.point_stabilizer(0, deadline).generators());
  std::vector<ClassId> pulled(ctx.order());
  search.run([&](const std::vector<Index>& label) {
    ++result.representatives;
    // Some linear psi with lam o psi in Aut(A)_0 must exist.
    for (Index z = 0; z < ctx.order(); ++z) pulled[z] = a.class_of(label[z]);
    internal::LinearMatcher matcher(ctx, a.class_map(), pulled, a.rank(),
                                    true, deadline);
    bool found = false;
    matcher.run([&](const std::vector<Index>&) {
      found = true;
      return false;
    });
    if (found) return true;
    result.ci = false;
    result.counterexample = inverse_of_labeling(label);
    return false;
  });
  return result;
}

}  // namespace

std::vector<Permutation> iso1_enumerate(const SRing& a,
                                        const Deadline& deadline) {
  if (a.context().order() > 81)
    throw LimitError("iso1_enumerate is limited to |H| <= 81");
  std::vector<Permutation> out;
  LabelSearch search(a, deadline);
  search.run([&](const std::vector<Index>& label) {
    out.push_back(inverse_of_labeling(label));
    return true;
  });
  std::sort(out.begin(), out.end());
  return out;
}

CiResult is_ci_sring(const SRing& a, const Deadline& deadline,
                     const CiOptions& options) {
  const GroupContext& ctx = a.context();
  const PermGroup aut = aut_group(a, deadline);
  const BigInt stabilizer_order = aut.order() / ctx.order();
  if (stabilizer_order <= options.max_stabilizer)
    return ci_by_regular_subgroups(a, aut, deadline, options.max_stabilizer);
  if (ctx.order() <= options.max_iso_order)
    return ci_by_isomorphisms(a, aut, deadline);
  throw LimitError("CI test: Aut(A) too large for both search routes");
}

CiResult is_ci_subset(const GroupContext& ctx, std::span<const Index> set,
                      const Deadline& deadline, const CiOptions& options) {
  return is_ci_sring(generated_sring(ctx, set), deadline, options);
}

}  // namespace sring
