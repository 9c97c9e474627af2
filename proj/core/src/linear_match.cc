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

#include "linear_match.h"

#include <algorithm>

namespace sring::internal {

LinearMatcher::LinearMatcher(const GroupContext& ctx,
                             std::span<const ClassId> src,
                             std::span<const ClassId> dst,
                             std::size_t num_classes, bool identity_map,
                             const Deadline& deadline)
    : ctx_(ctx), src_(src), dst_(dst), identity_map_(identity_map),
      deadline_(deadline), src_size_(num_classes, 0), dst_size_(num_classes, 0),
      image_(ctx.order(), -1), used_(ctx.order(), 0),
      map_(num_classes, -1), inverse_(num_classes, -1) {
  for (Index h = 0; h < ctx.order(); ++h) {
    ++src_size_.at(src[h]);
    ++dst_size_.at(dst[h]);
  }
  // Basis: repeatedly the least element outside the span from a smallest
  // class, which keeps candidate lists short.
  std::vector<char> in_span(ctx.order(), 0);
  std::vector<Index> members = {0};
  in_span[0] = 1;
  while (static_cast<int>(basis_.size()) < ctx.n()) {
    Index best = 0;
    std::size_t best_size = SIZE_MAX;
    for (Index h = 1; h < ctx.order(); ++h)
      if (!in_span[h] && src_size_[src[h]] < best_size) {
        best = h;
        best_size = src_size_[src[h]];
      }
    basis_.push_back(best);
    const std::size_t old = members.size();
    for (std::size_t i = 0; i < old; ++i)
      for (int c = 1; c < ctx.p(); ++c) {
        Index x = ctx.add(members[i], ctx.scale(c, best));
        in_span[x] = 1;
        members.push_back(x);
      }
  }
}

bool LinearMatcher::bind(ClassId from, ClassId to) {
  if (identity_map_) return from == to;
  if (map_[from] >= 0) return map_[from] == to;
  if (inverse_[to] >= 0 || src_size_[from] != dst_size_[to]) return false;
  map_[from] = to;
  inverse_[to] = from;
  bound_log_.push_back(from);
  return true;
}

void LinearMatcher::run(
    const std::function<bool(const std::vector<Index>&)>& on_match) {
  on_match_ = on_match;
  image_[0] = 0;
  used_[0] = 1;
  span_ = {0};
  if (!bind(src_[0], dst_[0])) return;
  extend(0);
}

bool LinearMatcher::extend(std::size_t k) {
  if ((++ticks_ & 255) == 0) deadline_.check("linear class matching");
  if (k == basis_.size()) {
    std::vector<Index> table(image_.begin(), image_.end());
    return on_match_(table);
  }
  const Index e = basis_[k];
  const std::size_t old = span_.size();
  for (Index y = 1; y < ctx_.order(); ++y) {
    if (used_[y]) continue;
    const std::size_t log_mark = bound_log_.size();
    bool ok = true;
    for (std::size_t i = 0; i < old && ok; ++i) {
      for (int c = 1; c < ctx_.p(); ++c) {
        Index x = ctx_.add(span_[i], ctx_.scale(c, e));
        Index z = ctx_.add(static_cast<Index>(image_[span_[i]]), ctx_.scale(c, y));
        image_[x] = z;
        used_[z] = 1;
        span_.push_back(x);
        if (!bind(src_[x], dst_[z])) {
          ok = false;
          break;
        }
      }
    }
    bool keep_going = true;
    if (ok) keep_going = extend(k + 1);
    for (std::size_t i = old; i < span_.size(); ++i) {
      used_[image_[span_[i]]] = 0;
      image_[span_[i]] = -1;
    }
    span_.resize(old);
    while (bound_log_.size() > log_mark) {
      ClassId from = bound_log_.back();
      bound_log_.pop_back();
      inverse_[map_[from]] = -1;
      map_[from] = -1;
    }
    if (!keep_going) return false;
  }
  return true;
}

AutMatrix LinearMatcher::to_matrix(const std::vector<Index>& images) const {
  const int n = ctx_.n(), p = ctx_.p();
  Matrix basis(p, n), targets(p, n);
  for (int r = 0; r < n; ++r) {
    Vector b = ctx_.to_vector(basis_[r]);
    Vector t = ctx_.to_vector(images[basis_[r]]);
    for (int c = 0; c < n; ++c) {
      basis.set(r, c, b[c]);
      targets.set(r, c, t[c]);
    }
  }
  return AutMatrix(*basis.inverse() * targets);
}

}  // namespace sring::internal
