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

#ifndef SRING_BUILD_H_
#define SRING_BUILD_H_

#include <span>

#include "sring/gfp.h"
#include "sring/sring.h"

namespace sring {

// Classes are the orbits of the matrix group generated by `gens`.
SRing transitivity_module(const GroupContext& ctx,
                          std::span<const AutMatrix> gens);

// Least S-ring in which `set` is a union of classes. Computed by
// stabilization from {0}, S, -S and the rest: classes are split by their
// full vector of product counts and by negation until nothing changes.
// The element 0, if present, is ignored.
SRing generated_sring(const GroupContext& ctx, std::span<const Index> set);

// Least S-ring in which every set is a union of classes.
SRing generated_sring(const GroupContext& ctx,
                      std::span<const ElementSet> sets);

// S-ring over H/K in the coordinates of QuotientMap(ctx, k).
SRing quotient_sring(const SRing& a, const Subspace& k);

// Classes inside K, re-indexed by SubspaceEmbedding(ctx, k).
SRing induced_sring(const SRing& a, const Subspace& k);

// Intersection of the two algebras: the finest partition coarser than both.
SRing intersect_srings(const SRing& a, const SRing& b);

// Classes R + S over H = E (+) F, with `ae` over the coordinates of E and
// `af` over those of F (SubspaceEmbedding).
SRing tensor_sring(const SRing& ae, const SRing& af, const Subspace& e,
                   const Subspace& f);

// E/F-wreath product. `ae` is over E (SubspaceEmbedding coordinates) and
// `aq` over H/F (QuotientMap coordinates). Requires F <= E, F an
// ae-subgroup, and the quotient of ae by F equal to the part of aq inside
// E/F; otherwise throws InputError naming the mismatched class.
SRing wedge_sring(const SRing& ae, const SRing& aq, const Subspace& e,
                  const Subspace& f);

// Plain wreath product: the wedge with E = F.
SRing wreath_sring(const SRing& ae, const SRing& aq, const Subspace& e);

}  // namespace sring

#endif  // SRING_BUILD_H_
