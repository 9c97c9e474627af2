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

#ifndef SRING_SRING_H_
#define SRING_SRING_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sring/common.h"
#include "sring/gfp.h"

namespace sring {

using ClassId = std::uint32_t;
using Partition = std::vector<ElementSet>;

// Outcome of checking a partition against the S-ring axioms.
struct Verdict {
  enum class Failure {
    kNone,
    kNotPartition,
    kIdentityClass,
    kInverseClosure,
    kConvolution,
  };
  Failure failure = Failure::kNone;
  std::string message;
  // For kConvolution: the two class indices whose product is not constant
  // on a class, and two elements of that class with different counts.
  std::vector<Index> witness;

  bool ok() const { return failure == Failure::kNone; }
};

std::string to_string(Verdict::Failure f);

// Checks the partition axioms, {0} being a class, closure under negation and
// convolution closure (class products constant on every class).
Verdict verify_sring(const GroupContext& ctx, const Partition& partition);

// Raised when a partition is not an S-ring.
class InvalidSRing : public InputError {
 public:
  explicit InvalidSRing(Verdict v)
      : InputError("not an S-ring: " + v.message), verdict_(std::move(v)) {}
  const Verdict& verdict() const { return verdict_; }

 private:
  Verdict verdict_;
};

// A class with its id.
struct BasicSet {
  ClassId id;
  std::span<const Index> elements;
  std::size_t size() const { return elements.size(); }
};

// A verified S-ring over Z_p^n. Classes are sorted internally and listed by
// least element, so the class of 0 comes first.
class SRing {
 public:
  // Throws InvalidSRing if the partition fails verification.
  static SRing create(const GroupContext& ctx, Partition partition);

  static SRing full_group_algebra(const GroupContext& ctx);
  static SRing rank_two(const GroupContext& ctx);

  const GroupContext& context() const { return ctx_; }
  std::size_t rank() const { return classes_.size(); }
  const Partition& classes() const { return classes_; }
  ClassId class_of(Index h) const { return class_of_[h]; }
  const std::vector<ClassId>& class_map() const { return class_of_; }
  BasicSet basic_set(ClassId id) const { return {id, classes_.at(id)}; }

  // Sorted class sizes.
  std::vector<std::size_t> size_profile() const;

  friend bool operator==(const SRing& a, const SRing& b) {
    return a.ctx_ == b.ctx_ && a.classes_ == b.classes_;
  }

 private:
  SRing(GroupContext ctx, Partition classes);

  GroupContext ctx_;
  Partition classes_;
  std::vector<ClassId> class_of_;
};

// Sorts each class and orders classes by least element.
Partition normalize_partition(Partition partition);

// Coefficient of the class-k simple quantity in the product of the class-i
// and class-j simple quantities.
std::uint64_t structure_constant(const SRing& a, ClassId i, ClassId j, ClassId k);

// {h : h + S = S}.
Subspace radical(const GroupContext& ctx, std::span<const Index> set);
// Subgroup generated by S.
Subspace span_subgroup(const GroupContext& ctx, std::span<const Index> set);
// Union of the singleton classes; always a subgroup.
Subspace thin_radical(const SRing& a);

bool is_union_of_classes(const SRing& a, std::span<const Index> set);
bool is_a_subgroup(const SRing& a, const Subspace& k);
// All subgroups that are unions of classes, in canonical order.
std::vector<Subspace> a_subgroups(const SRing& a);

bool is_p_sring(const SRing& a);
// A-subgroups {0} = H_0 < ... < H_n = H with index p at each step; the
// least admissible subgroup is taken at every step.
std::vector<Subspace> subgroup_chain(const SRing& a);

// The common value of |(K + h) cap T| for h in T.
std::size_t coset_intersection_profile(const SRing& a, const Subspace& k,
                                       ClassId t);

}  // namespace sring

#endif  // SRING_SRING_H_
