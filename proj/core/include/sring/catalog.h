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

#ifndef SRING_CATALOG_H_
#define SRING_CATALOG_H_

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "sring/analysis.h"
#include "sring/gfp.h"
#include "sring/sring.h"

namespace sring {

// Transitivity module of the single unipotent Jordan block on Z_p^3.
// Supports odd primes p <= 7.
SRing exceptional_sring(int p);

struct Ll2Ring {
  SRing ring;                    // V(Z_p^5, L)
  std::vector<AutMatrix> group;  // generators x, y of L
};

// x: v1 -> v1 + v3, v2 -> v2 + v4; y: v1 -> v1 + v4, v2 -> v2 + v5; both
// fix v3, v4, v5. Supports p in {3, 5}.
Ll2Ring ll2_sring(int p);

// The six reference rings over Z_p^3, in row order:
//   Q H, Q Z_p^2 wr Q Z_p, Q Z_p wr Q Z_p^2, (Q Z_p wr Q Z_p) x Q Z_p,
//   Q Z_p wr Q Z_p wr Q Z_p, exceptional.
std::vector<SRing> table1_reference_rings(int p);

// Every subgroup of the finite matrix group whose full element list is
// `elements`, each as a sorted element list, in order of discovery.
std::vector<std::vector<AutMatrix>> matrix_subgroups(
    std::span<const AutMatrix> elements, const Deadline& deadline = {});

// Closure of `gens` under multiplication, sorted.
std::vector<AutMatrix> matrix_group_elements(std::span<const AutMatrix> gens,
                                             int p, int n);

// Uniformly random strictly upper unitriangular matrix.
AutMatrix random_unitriangular(int p, int n, std::mt19937_64& rng);

inline constexpr std::size_t kTable1Rows = 6;

struct ClassificationClass {
  SRing representative;
  Fingerprint fingerprint;
  bool schurian = false;
  std::size_t member_count = 0;
  // Matching reference row (1-based), 0 if none matched.
  int row = 0;
};

struct ClassificationReport {
  int p = 0;
  int n = 0;
  std::size_t total_inputs = 0;
  std::vector<ClassificationClass> classes;
  std::string scope = "classes realized by unitriangular transitivity modules";

  bool matches_table() const;
};

// Transitivity modules of all subgroups of UT(3, p), grouped into Cayley
// isomorphism classes. Classes are sorted by decreasing rank, then by the
// serialized representative.
ClassificationReport build_table1(int p, const Deadline& deadline = {});

}  // namespace sring

#endif  // SRING_CATALOG_H_
