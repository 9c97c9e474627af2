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
#include <numeric>

#include "sring/perm_group.h"

namespace sring {
namespace {

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Ordered partition: cell[v] is the rank of v's cell.
struct Node {
  std::vector<std::uint32_t> cell;
  std::uint32_t num_cells = 0;
};

class Searcher {
 public:
  Searcher(const PairColoring& coloring, std::span<const std::uint32_t> vcolors,
           const Deadline& deadline)
      : c_(coloring), n_(coloring.degree), deadline_(deadline) {
    vcolor_.assign(n_, 0);
    if (!vcolors.empty()) {
      if (vcolors.size() != n_) throw InputError("vertex color count mismatch");
      vcolor_.assign(vcolors.begin(), vcolors.end());
    }
    key_.resize(n_);
    order_.resize(n_);
  }

  PermGroup run() {
    if (n_ == 0) return PermGroup::trivial(0);
    // Initial partition by vertex color.
    std::vector<std::uint32_t> distinct = vcolor_;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    Node root;
    root.cell.resize(n_);
    for (std::size_t v = 0; v < n_; ++v)
      root.cell[v] = static_cast<std::uint32_t>(
          std::lower_bound(distinct.begin(), distinct.end(), vcolor_[v]) -
          distinct.begin());
    root.num_cells = static_cast<std::uint32_t>(distinct.size());
    traces_.emplace_back();
    refine(root, &traces_.back(), nullptr);
    path_.push_back(std::move(root));

    // First path down to a discrete partition.
    while (path_.back().num_cells < n_) {
      const Node& node = path_.back();
      std::uint32_t target = pick_target(node);
      std::vector<Point> members;
      for (std::size_t v = 0; v < n_; ++v)
        if (node.cell[v] == target) members.push_back(static_cast<Point>(v));
      target_.push_back(target);
      members_.push_back(members);
      base_.push_back(members.front());
      Node child = individualize(node, members.front());
      traces_.emplace_back();
      refine(child, &traces_.back(), nullptr);
      path_.push_back(std::move(child));
    }
    first_leaf_ = vertex_at(path_.back());

    parent_.resize(n_);
    std::iota(parent_.begin(), parent_.end(), Point{0});
    for (std::size_t d = base_.size(); d-- > 0;) {
      for (Point v : members_[d]) {
        if (v == base_[d] || find(v) == find(base_[d])) continue;
        Node child = individualize(path_[d], v);
        if (!refine(child, nullptr, &traces_[d + 1])) continue;
        if (auto g = dfs(child, d + 1)) {
          for (std::size_t x = 0; x < n_; ++x) unite(static_cast<Point>(x), (*g)(static_cast<Point>(x)));
          gens_.push_back(std::move(*g));
        }
      }
    }
    return PermGroup::from_strong_generators(n_, base_, gens_);
  }

 private:
  std::uint32_t pick_target(const Node& node) const {
    std::vector<std::uint32_t> size(node.num_cells, 0);
    for (auto c : node.cell) ++size[c];
    std::uint32_t best = 0, best_size = 0xffffffffu;
    for (std::uint32_t c = 0; c < node.num_cells; ++c)
      if (size[c] > 1 && size[c] < best_size) {
        best = c;
        best_size = size[c];
      }
    return best;
  }

  Node individualize(const Node& node, Point v) const {
    Node out;
    out.cell.resize(n_);
    const std::uint32_t t = node.cell[v];
    for (std::size_t w = 0; w < n_; ++w) {
      std::uint32_t c = node.cell[w];
      out.cell[w] = c < t ? c : (c > t ? c + 1 : (w == v ? t : t + 1));
    }
    out.num_cells = node.num_cells + 1;
    return out;
  }

  // Equitable refinement by multiset hashes of (arc color, neighbor cell)
  // in both directions. Either records the trace or checks it against
  // `expected`, returning false on the first difference.
  bool refine(Node& node, std::vector<std::uint64_t>* record,
              const std::vector<std::uint64_t>* expected) {
    std::size_t round = 0;
    while (node.num_cells < n_) {
      deadline_.check("automorphism search");
      const auto& cell = node.cell;
      for (std::size_t v = 0; v < n_; ++v) {
        std::uint64_t h = 0;
        const std::uint32_t* row = &c_.colors[v * n_];
        for (std::size_t w = 0; w < n_; ++w) {
          h += splitmix((std::uint64_t{row[w]} << 32) | cell[w]);
          h += splitmix(((std::uint64_t{c_.colors[w * n_ + v]} << 32) | cell[w]) ^
                        0x5851f42d4c957f2dULL);
        }
        key_[v] = h;
      }
      std::iota(order_.begin(), order_.end(), Point{0});
      std::sort(order_.begin(), order_.end(), [&](Point a, Point b) {
        if (cell[a] != cell[b]) return cell[a] < cell[b];
        return key_[a] < key_[b];
      });
      std::vector<std::uint32_t> next(n_);
      std::uint32_t id = 0;
      std::uint64_t summary = 0;
      for (std::size_t i = 0; i < n_; ++i) {
        Point v = order_[i];
        if (i > 0) {
          Point u = order_[i - 1];
          if (cell[u] != cell[v] || key_[u] != key_[v]) ++id;
        }
        next[v] = id;
        summary = splitmix(summary ^ key_[v] ^ (std::uint64_t{id} << 40));
      }
      const std::uint32_t count = id + 1;
      const std::uint64_t item = splitmix(summary ^ count);
      if (record) record->push_back(item);
      if (expected) {
        if (round >= expected->size() || (*expected)[round] != item) return false;
      }
      ++round;
      const bool stable = count == node.num_cells;
      node.cell = std::move(next);
      node.num_cells = count;
      if (stable) break;
    }
    if (expected && round != expected->size()) return false;
    return true;
  }

  std::vector<Point> vertex_at(const Node& leaf) const {
    std::vector<Point> at(n_);
    for (std::size_t v = 0; v < n_; ++v) at[leaf.cell[v]] = static_cast<Point>(v);
    return at;
  }

  std::optional<Permutation> dfs(const Node& node, std::size_t depth) {
    deadline_.check("automorphism search");
    if (depth == base_.size()) return check_leaf(node);
    const std::uint32_t target = target_[depth];
    for (std::size_t u = 0; u < n_; ++u) {
      if (node.cell[u] != target) continue;
      Node child = individualize(node, static_cast<Point>(u));
      if (!refine(child, nullptr, &traces_[depth + 1])) continue;
      if (auto g = dfs(child, depth + 1)) return g;
    }
    return std::nullopt;
  }

  std::optional<Permutation> check_leaf(const Node& leaf) const {
    if (leaf.num_cells != n_) return std::nullopt;
    const auto at = vertex_at(leaf);
    std::vector<Point> img(n_);
    for (std::size_t i = 0; i < n_; ++i) img[first_leaf_[i]] = at[i];
    for (std::size_t v = 0; v < n_; ++v) {
      if (vcolor_[v] != vcolor_[img[v]]) return std::nullopt;
      const std::uint32_t* row = &c_.colors[v * n_];
      const std::uint32_t* mapped = &c_.colors[std::size_t{img[v]} * n_];
      for (std::size_t w = 0; w < n_; ++w)
        if (row[w] != mapped[img[w]]) return std::nullopt;
    }
    return Permutation(std::move(img));
  }

  Point find(Point x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(Point a, Point b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

  const PairColoring& c_;
  const std::size_t n_;
  const Deadline& deadline_;
  std::vector<std::uint32_t> vcolor_;
  std::vector<std::uint64_t> key_;
  std::vector<Point> order_;

  std::vector<Node> path_;
  std::vector<std::vector<std::uint64_t>> traces_;
  std::vector<std::uint32_t> target_;
  std::vector<std::vector<Point>> members_;
  std::vector<Point> base_;
  std::vector<Point> first_leaf_;
  std::vector<Point> parent_;
  std::vector<Permutation> gens_;
};

}  // namespace

PermGroup coloring_automorphisms(const PairColoring& coloring,
                                 std::span<const std::uint32_t> vertex_colors,
                                 const Deadline& deadline) {
  if (coloring.colors.size() != coloring.degree * coloring.degree)
    throw InputError("coloring size mismatch");
  return Searcher(coloring, vertex_colors, deadline).run();
}

}  // namespace sring
