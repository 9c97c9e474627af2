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

#ifndef SRING_SRC_LINEAR_MATCH_H_
#define SRING_SRC_LINEAR_MATCH_H_

#include <functional>
#include <span>
#include <vector>

#include "sring/gfp.h"
#include "sring/sring.h"

namespace sring::internal {

// Backtracking search for linear bijections phi of H with
// dst[phi(x)] = map(src[x]) for all x, where `map` is either the identity
// on class labels or any size-preserving bijection discovered on the way.
class LinearMatcher {
 public:
  LinearMatcher(const GroupContext& ctx, std::span<const ClassId> src,
                std::span<const ClassId> dst, std::size_t num_classes,
                bool identity_map, const Deadline& deadline);

  // Calls `on_match` with the full image table of each match until it
  // returns false.
  void run(const std::function<bool(const std::vector<Index>&)>& on_match);

  // Matrix of the linear map given by a full image table.
  AutMatrix to_matrix(const std::vector<Index>& images) const;

 private:
  bool bind(ClassId from, ClassId to);
  bool extend(std::size_t k);

  const GroupContext& ctx_;
  std::span<const ClassId> src_;
  std::span<const ClassId> dst_;
  bool identity_map_;
  const Deadline& deadline_;
  std::vector<std::size_t> src_size_;
  std::vector<std::size_t> dst_size_;
  std::vector<Index> basis_;
  std::vector<std::int64_t> image_;     // -1 when unset
  std::vector<char> used_;              // codomain elements already hit
  std::vector<Index> span_;             // domain elements with an image
  std::vector<std::int64_t> map_;       // class map
  std::vector<std::int64_t> inverse_;
  std::vector<ClassId> bound_log_;
  std::function<bool(const std::vector<Index>&)> on_match_;
  std::uint64_t ticks_ = 0;
};

}  // namespace sring::internal

#endif  // SRING_SRC_LINEAR_MATCH_H_
