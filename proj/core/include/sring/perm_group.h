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

#ifndef SRING_PERM_GROUP_H_
#define SRING_PERM_GROUP_H_

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "sring/common.h"
#include "sring/gfp.h"

namespace sring {

using Point = std::uint16_t;
using BigInt = boost::multiprecision::cpp_int;

// A bijection of {0, ..., degree-1}. Permutations act on the right:
// (x)(g * h) = ((x)g)h.
class Permutation {
 public:
  Permutation() = default;
  // Throws InputError unless `images` is a bijection.
  explicit Permutation(std::vector<Point> images);
  static Permutation identity(std::size_t degree);

  std::size_t degree() const { return images_.size(); }
  Point operator()(Point x) const { return images_[x]; }
  const std::vector<Point>& images() const { return images_; }

  Permutation operator*(const Permutation& rhs) const;
  Permutation inverse() const;
  Permutation pow(std::uint64_t k) const;
  bool is_identity() const;
  std::uint64_t order() const;
  std::size_t fixed_points() const;
  // g^-1 * this * g.
  Permutation conjugate_by(const Permutation& g) const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  struct Trusted {};
  Permutation(std::vector<Point> images, Trusted) : images_(std::move(images)) {}
  std::vector<Point> images_;
};

// Default bound on the number of elements materialized by element listings.
inline constexpr std::uint64_t kDefaultEnumerationLimit = 1'000'000;

// Permutation group with a stabilizer chain (base, strong generators and
// explicit transversals). Immutable once built.
class PermGroup {
 public:
  // Group generated by `gens` (Schreier-Sims). The base starts with
  // `base_prefix`; points are appended as needed.
  static PermGroup generate(std::size_t degree, std::vector<Permutation> gens,
                            std::span<const Point> base_prefix = {},
                            const Deadline& deadline = {});
  // Builds the chain directly from a known base and strong generating set.
  // The caller guarantees the strong generating property.
  static PermGroup from_strong_generators(std::size_t degree,
                                          std::vector<Point> base,
                                          std::vector<Permutation> strong);
  static PermGroup trivial(std::size_t degree);

  std::size_t degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return generators_; }
  const BigInt& order() const { return order_; }
  bool order_fits(std::uint64_t limit) const { return order_ <= limit; }

  bool contains(const Permutation& g) const;
  bool is_transitive() const;
  bool is_p_group(int p) const;

  const std::vector<Point>& base() const { return base_; }
  // Orbit of base point `level` under the stabilizer of the earlier ones.
  const std::vector<Point>& basic_orbit(std::size_t level) const {
    return levels_[level].orbit;
  }
  // Strong generators fixing base[0..level).
  std::vector<Permutation> stabilizer_generators(std::size_t level) const;

  // Stabilizer of a single point.
  PermGroup point_stabilizer(Point x, const Deadline& deadline = {}) const;

  // Calls `fn` on every element (in a fixed order). Throws LimitError if the
  // order exceeds `limit`.
  void for_each_element(const std::function<void(const Permutation&)>& fn,
                        std::uint64_t limit = kDefaultEnumerationLimit) const;
  std::vector<Permutation> elements(
      std::uint64_t limit = kDefaultEnumerationLimit) const;

  // True when both groups have the same elements.
  bool same_group(const PermGroup& other) const;
  // True when every generator of `other` lies in this group.
  bool contains_group(const PermGroup& other) const;

 private:
  struct Level {
    Point base_point = 0;
    std::vector<Point> orbit;
    // transversal[slot[x]] maps base_point to x; slot[x] == -1 off the orbit.
    std::vector<std::int32_t> slot;
    std::vector<Permutation> transversal;
    // Generators first added at this level.
    std::vector<Permutation> own;
  };
  class Builder;

  // Sifts g; returns the residue and the level where sifting stopped
  // (levels_.size() if g sifted through every level).
  std::pair<Permutation, std::size_t> sift(Permutation g) const;
  void finish();

  std::size_t degree_ = 0;
  std::vector<Permutation> generators_;
  std::vector<Point> base_;
  std::vector<Level> levels_;
  BigInt order_ = 1;
};

// Orbits of the group generated by `gens` on {0, ..., degree-1}, each
// sorted, listed by least element.
std::vector<std::vector<Point>> orbits(std::size_t degree,
                                       std::span<const Permutation> gens);

// Arc coloring of the complete digraph with loops on `degree` points.
struct PairColoring {
  std::size_t degree = 0;
  std::uint32_t num_colors = 0;
  std::vector<std::uint32_t> colors;  // row-major degree x degree

  std::uint32_t at(std::size_t i, std::size_t j) const {
    return colors[i * degree + j];
  }
  friend bool operator==(const PairColoring&, const PairColoring&) = default;
};

// Orbits on ordered pairs, colored 0, 1, ... in order of their least pair.
using OrbitalColoring = PairColoring;
OrbitalColoring orbitals(const PermGroup& g);
OrbitalColoring orbitals(std::size_t degree, std::span<const Permutation> gens);

// Color-preserving permutations of `coloring` that also preserve the
// optional vertex colors. Individualization-refinement search; the first
// smallest cell is the target and branching follows index order.
PermGroup coloring_automorphisms(const PairColoring& coloring,
                                 std::span<const std::uint32_t> vertex_colors,
                                 const Deadline& deadline = {});

// Automorphism group of the orbital coloring of g.
PermGroup two_closure(const PermGroup& g, const Deadline& deadline = {});

// x -> x M + t on the indices of ctx.
Permutation perm_from_affine(const GroupContext& ctx, const AutMatrix& m,
                             std::span<const int> t);
Permutation translation(const GroupContext& ctx, Index t);
// The group H_R of all translations.
PermGroup translation_group(const GroupContext& ctx);

// All subgroups of g that are regular and elementary abelian of order p^n.
// Each is listed once, by its canonical generators (the elements that send
// 0 to successive least uncovered points).
std::vector<PermGroup> regular_elem_abelian_subgroups(
    const PermGroup& g, const GroupContext& ctx, const Deadline& deadline = {},
    std::uint64_t limit = kDefaultEnumerationLimit);

// Some element c of g with c^-1 k1 c = k2, or nullopt if none exists.
std::optional<Permutation> subgroup_conjugacy(
    const PermGroup& g, const PermGroup& k1, const PermGroup& k2,
    const Deadline& deadline = {},
    std::uint64_t limit = kDefaultEnumerationLimit);

// Common fixed subspace C_H(mats) of a set of matrices.
Subspace centralizer_subspace(const GroupContext& ctx,
                              std::span<const AutMatrix> mats);

// Permutation induced on the cosets of w (indexed in the quotient
// coordinates used by QuotientMap).
class QuotientMap;
Permutation induced_on_cosets(const QuotientMap& q, const Permutation& g);

}  // namespace sring

#endif  // SRING_PERM_GROUP_H_
