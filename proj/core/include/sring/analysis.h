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

#ifndef SRING_ANALYSIS_H_
#define SRING_ANALYSIS_H_

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "sring/perm_group.h"
#include "sring/sring.h"

namespace sring {

// Pair (u, v) colored by the class of v - u.
PairColoring cayley_coloring(const SRing& a);

// Color-preserving permutations of the Cayley coloring. Contains H_R and is
// 2-closed.
PermGroup aut_group(const SRing& a, const Deadline& deadline = {});

// Classes coincide with the orbits of the stabilizer of 0 in Aut(A).
bool is_schurian(const SRing& a, const PermGroup& aut);
bool is_schurian(const SRing& a, const Deadline& deadline = {});

struct WedgeWitness {
  Subspace e;
  Subspace f;
};

// True when F <= E are A-subgroups and F <= rad(T) for each class T outside E.
bool is_wedge_witness(const SRing& a, const Subspace& e, const Subspace& f);

// First pair F <= E with F != 0, E != H satisfying the wedge condition, with
// E scanned from the largest A-subgroups down and F from the smallest up.
std::optional<WedgeWitness> decomposability_witness(const SRing& a);

// Cheap Cayley-isomorphism invariants.
struct Fingerprint {
  std::size_t rank = 0;
  std::vector<std::size_t> class_sizes;       // sorted
  std::vector<std::size_t> subgroups_by_dim;  // A-subgroup counts, dims 0..n
  bool decomposable = false;

  friend auto operator<=>(const Fingerprint&, const Fingerprint&) = default;
};
Fingerprint fingerprint(const SRing& a);

// A matrix M with {T M : T in Bs(a)} = Bs(b), or nullopt if none exists.
// Backtracks over images of a basis, keeping the induced class map
// consistent on the span built so far.
std::optional<AutMatrix> cayley_isomorphic(const SRing& a, const SRing& b,
                                           const Deadline& deadline = {});

// Linear maps preserving every class.
std::vector<AutMatrix> cayley_automorphisms(const SRing& a,
                                            const Deadline& deadline = {});

// True when no proper subgroup X with H_R <= X < Aut(A) has the same
// orbits on pairs as Aut(A). Tries X = <H_R, s> first, then walks every
// subgroup containing H_R. Throws LimitError when the stabilizer of 0 in
// Aut(A) has more than `limit` elements.
bool teq_minimal(const SRing& a, const Deadline& deadline = {},
                 std::uint64_t limit = 20'000);

// All bijections f fixing 0 that carry A onto an S-ring over H: f(y) - f(x)
// lies in f(T) whenever y - x lies in T. Throws LimitError for |H| > 81.
std::vector<Permutation> iso1_enumerate(const SRing& a,
                                        const Deadline& deadline = {});

// Kernel of Aut(A) acting on the cosets of the A-subgroup W.
PermGroup kernel_on_quotient(const SRing& a, const Subspace& w,
                             const Deadline& deadline = {});

// ------------------------------------------------------------- CI tests

struct CiOptions {
  // Regular-subgroup route while |Aut(A)_0| stays within this bound.
  std::uint64_t max_stabilizer = 200'000;
  // Otherwise the normalized-isomorphism route up to this group order.
  Index max_iso_order = 81;
};

struct RegularWitness {
  std::vector<Permutation> generators;
  // c in Aut(A) with c^-1 H_R c equal to this subgroup, if any.
  std::optional<Permutation> conjugator;
};

struct CiResult {
  enum class Method { kRegularSubgroups, kNormalizedIsomorphisms };

  bool ci = false;
  Method method = Method::kRegularSubgroups;
  // Regular-subgroup route: every regular elementary abelian subgroup.
  std::vector<RegularWitness> regular_subgroups;
  // Isomorphism route: orbit representatives examined, and a normalized
  // isomorphism outside Aut(A)_0 Aut(H) when one exists.
  std::uint64_t representatives = 0;
  std::optional<Permutation> counterexample;
};

// Every regular elementary abelian subgroup of Aut(A) is conjugate to H_R
// inside Aut(A).
CiResult is_ci_sring(const SRing& a, const Deadline& deadline = {},
                     const CiOptions& options = {});
CiResult is_ci_subset(const GroupContext& ctx, std::span<const Index> set,
                      const Deadline& deadline = {},
                      const CiOptions& options = {});

}  // namespace sring

#endif  // SRING_ANALYSIS_H_
