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

#include "sring/perm_group.h"

#include <algorithm>
#include <numeric>
#include <string>

namespace sring {

// ------------------------------------------------------------- Permutation

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<char> seen(images_.size(), 0);
  for (Point x : images_) {
    if (x >= images_.size() || seen[x])
      throw InputError("image sequence is not a permutation");
    seen[x] = 1;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  std::vector<Point> im(degree);
  std::iota(im.begin(), im.end(), Point{0});
  return Permutation(std::move(im), Trusted{});
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  if (rhs.degree() != degree()) throw InputError("degree mismatch");
  std::vector<Point> im(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) im[i] = rhs.images_[images_[i]];
  return Permutation(std::move(im), Trusted{});
}

Permutation Permutation::inverse() const {
  std::vector<Point> im(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i)
    im[images_[i]] = static_cast<Point>(i);
  return Permutation(std::move(im), Trusted{});
}

Permutation Permutation::pow(std::uint64_t k) const {
  Permutation result = identity(degree()), base = *this;
  for (; k > 0; k >>= 1) {
    if (k & 1) result = result * base;
    base = base * base;
  }
  return result;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

std::uint64_t Permutation::order() const {
  std::vector<char> seen(images_.size(), 0);
  std::uint64_t result = 1;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    std::uint64_t len = 0;
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = 1;
      ++len;
    }
    result = std::lcm(result, len);
  }
  return result;
}

std::size_t Permutation::fixed_points() const {
  std::size_t count = 0;
  for (std::size_t i = 0; i < images_.size(); ++i) count += images_[i] == i;
  return count;
}

Permutation Permutation::conjugate_by(const Permutation& g) const {
  return g.inverse() * *this * g;
}

// --------------------------------------------------------------- PermGroup

class PermGroup::Builder {
 public:
  Builder(std::size_t degree, std::span<const Point> prefix,
          const Deadline& deadline)
      : degree_(degree), prefix_(prefix.begin(), prefix.end()),
        deadline_(deadline) {
    for (Point x : prefix_)
      if (x >= degree_) throw InputError("base point out of range");
  }

  void add_generator(const Permutation& g) {
    if (g.degree() != degree_) throw InputError("generator degree mismatch");
    auto [residue, level] = sift(g, 0);
    if (!residue.is_identity()) add_strong(level, std::move(residue), 0);
  }

  PermGroup finish(std::vector<Permutation> gens) {
    PermGroup out;
    out.degree_ = degree_;
    out.generators_ = std::move(gens);
    out.levels_ = std::move(levels_);
    out.finish();
    return out;
  }

 private:
  std::pair<Permutation, std::size_t> sift(Permutation g, std::size_t from) {
    for (std::size_t i = from; i < levels_.size(); ++i) {
      const Level& lv = levels_[i];
      Point beta = g(lv.base_point);
      std::int32_t s = lv.slot[beta];
      if (s < 0) return {std::move(g), i};
      g = g * inverses_[i][s];
    }
    return {std::move(g), levels_.size()};
  }

  void push_level(const Permutation& g) {
    Point b;
    if (next_prefix_ < prefix_.size()) {
      b = prefix_[next_prefix_++];
    } else {
      b = 0;
      while (g(b) == b) ++b;
    }
    Level lv;
    lv.base_point = b;
    lv.orbit = {b};
    lv.slot.assign(degree_, -1);
    lv.slot[b] = 0;
    lv.transversal = {Permutation::identity(degree_)};
    levels_.push_back(std::move(lv));
    inverses_.push_back({Permutation::identity(degree_)});
    strong_.emplace_back();
    tested_.push_back({0});
  }

  // Adds r (fixing the first `level` base points) as a strong generator.
  // Levels below `fresh` already generate a group containing r.
  void add_strong(std::size_t level, Permutation r, std::size_t fresh) {
    // r fixes the base points before `level`; move down to the first base
    // point it moves, appending base points as needed.
    while (true) {
      if (level == levels_.size()) push_level(r);
      if (r(levels_[level].base_point) != levels_[level].base_point) break;
      ++level;
    }
    levels_[level].own.push_back(r);
    const std::size_t lo = std::min(fresh, level);
    for (std::size_t k = lo; k <= level; ++k) {
      strong_[k].push_back(r);
      extend_orbit(k);
    }
    for (std::size_t k = level + 1; k-- > lo;) test_schreier(k);
  }

  void extend_orbit(std::size_t k) {
    Level& lv = levels_[k];
    // Close the orbit under all generators of this level.
    for (std::size_t pos = 0; pos < lv.orbit.size(); ++pos) {
      Point x = lv.orbit[pos];
      for (const Permutation& s : strong_[k]) {
        Point y = s(x);
        if (lv.slot[y] >= 0) continue;
        lv.slot[y] = static_cast<std::int32_t>(lv.transversal.size());
        lv.transversal.push_back(lv.transversal[lv.slot[x]] * s);
        inverses_[k].push_back(lv.transversal.back().inverse());
        lv.orbit.push_back(y);
        tested_[k].push_back(0);
      }
    }
  }

  void test_schreier(std::size_t k) {
    for (std::size_t pos = 0; pos < levels_[k].orbit.size(); ++pos) {
      while (tested_[k][pos] < strong_[k].size()) {
        deadline_.check("stabilizer chain");
        const std::size_t gi = tested_[k][pos]++;
        const Level& lv = levels_[k];
        Point beta = lv.orbit[pos];
        const Permutation& s = strong_[k][gi];
        Point img = s(beta);
        Permutation h = lv.transversal[lv.slot[beta]] * s *
                        inverses_[k][lv.slot[img]];
        auto [residue, at] = sift(std::move(h), k + 1);
        if (!residue.is_identity()) add_strong(at, std::move(residue), k + 1);
      }
    }
  }

  std::size_t degree_;
  std::vector<Point> prefix_;
  std::size_t next_prefix_ = 0;
  const Deadline& deadline_;
  std::vector<Level> levels_;
  std::vector<std::vector<Permutation>> inverses_;
  std::vector<std::vector<Permutation>> strong_;
  std::vector<std::vector<std::size_t>> tested_;
};

PermGroup PermGroup::generate(std::size_t degree, std::vector<Permutation> gens,
                              std::span<const Point> base_prefix,
                              const Deadline& deadline) {
  if (degree > 65535) throw LimitError("degree too large");
  Builder b(degree, base_prefix, deadline);
  std::vector<Permutation> kept;
  for (auto& g : gens) {
    if (g.degree() != degree) throw InputError("generator degree mismatch");
    if (g.is_identity()) continue;
    b.add_generator(g);
    kept.push_back(std::move(g));
  }
  return b.finish(std::move(kept));
}

PermGroup PermGroup::trivial(std::size_t degree) {
  return generate(degree, {});
}

PermGroup PermGroup::from_strong_generators(std::size_t degree,
                                            std::vector<Point> base,
                                            std::vector<Permutation> strong) {
  PermGroup out;
  out.degree_ = degree;
  for (Point b : base) {
    Level lv;
    lv.base_point = b;
    out.levels_.push_back(std::move(lv));
  }
  for (const auto& g : strong) {
    if (g.degree() != degree) throw InputError("generator degree mismatch");
    if (g.is_identity()) continue;
    std::size_t lvl = 0;
    while (lvl < base.size() && g(base[lvl]) == base[lvl]) ++lvl;
    if (lvl == base.size()) throw InputError("strong generator fixes the base");
    out.levels_[lvl].own.push_back(g);
    out.generators_.push_back(g);
  }
  for (std::size_t k = 0; k < out.levels_.size(); ++k) {
    Level& lv = out.levels_[k];
    std::vector<Permutation> gens;
    for (std::size_t j = k; j < out.levels_.size(); ++j)
      gens.insert(gens.end(), out.levels_[j].own.begin(), out.levels_[j].own.end());
    lv.slot.assign(degree, -1);
    lv.slot[lv.base_point] = 0;
    lv.orbit = {lv.base_point};
    lv.transversal = {Permutation::identity(degree)};
    for (std::size_t pos = 0; pos < lv.orbit.size(); ++pos) {
      Point x = lv.orbit[pos];
      for (const auto& s : gens) {
        Point y = s(x);
        if (lv.slot[y] >= 0) continue;
        lv.slot[y] = static_cast<std::int32_t>(lv.transversal.size());
        lv.transversal.push_back(lv.transversal[lv.slot[x]] * s);
        lv.orbit.push_back(y);
      }
    }
  }
  out.finish();
  return out;
}

void PermGroup::finish() {
  // Drop trailing levels with trivial orbits; they carry no information.
  while (!levels_.empty() && levels_.back().orbit.size() == 1 &&
         levels_.back().own.empty())
    levels_.pop_back();
  base_.clear();
  order_ = 1;
  for (const auto& lv : levels_) {
    base_.push_back(lv.base_point);
    order_ *= lv.orbit.size();
  }
}

std::pair<Permutation, std::size_t> PermGroup::sift(Permutation g) const {
  for (std::size_t i = 0; i < levels_.size(); ++i) {
    const Level& lv = levels_[i];
    std::int32_t s = lv.slot[g(lv.base_point)];
    if (s < 0) return {std::move(g), i};
    g = g * lv.transversal[s].inverse();
  }
  return {std::move(g), levels_.size()};
}

bool PermGroup::contains(const Permutation& g) const {
  if (g.degree() != degree_) return false;
  return sift(g).first.is_identity();
}

bool PermGroup::is_transitive() const {
  return orbits(degree_, generators_).size() <= 1;
}

bool PermGroup::is_p_group(int p) const {
  BigInt o = order_;
  while (o > 1 && o % p == 0) o /= p;
  return o == 1;
}

std::vector<Permutation> PermGroup::stabilizer_generators(std::size_t level) const {
  std::vector<Permutation> out;
  for (std::size_t j = level; j < levels_.size(); ++j)
    out.insert(out.end(), levels_[j].own.begin(), levels_[j].own.end());
  return out;
}

PermGroup PermGroup::point_stabilizer(Point x, const Deadline& deadline) const {
  Point prefix[] = {x};
  PermGroup g = generate(degree_, generators_, prefix, deadline);
  PermGroup out;
  out.degree_ = degree_;
  if (!g.levels_.empty() && g.levels_[0].base_point == x) {
    out.generators_ = g.stabilizer_generators(1);
    out.levels_.assign(g.levels_.begin() + 1, g.levels_.end());
  } else {
    // x is fixed by the whole group.
    out.generators_ = g.generators_;
    out.levels_ = g.levels_;
  }
  out.finish();
  return out;
}

void PermGroup::for_each_element(
    const std::function<void(const Permutation&)>& fn,
    std::uint64_t limit) const {
  if (order_ > limit)
    throw LimitError("group order " + order_.str() + " exceeds the limit " +
                     std::to_string(limit));
  // g = u_{L-1} * ... * u_0.
  std::function<void(std::size_t, const Permutation&)> rec =
      [&](std::size_t level, const Permutation& acc) {
        if (level == 0) {
          fn(acc);
          return;
        }
        for (const auto& u : levels_[level - 1].transversal) rec(level - 1, acc * u);
      };
  rec(levels_.size(), Permutation::identity(degree_));
}

std::vector<Permutation> PermGroup::elements(std::uint64_t limit) const {
  std::vector<Permutation> out;
  for_each_element([&](const Permutation& g) { out.push_back(g); }, limit);
  return out;
}

bool PermGroup::contains_group(const PermGroup& other) const {
  return std::all_of(other.generators_.begin(), other.generators_.end(),
                     [&](const Permutation& g) { return contains(g); });
}

bool PermGroup::same_group(const PermGroup& other) const {
  return degree_ == other.degree_ && order_ == other.order_ &&
         contains_group(other);
}

// ----------------------------------------------------------------- Orbits

std::vector<std::vector<Point>> orbits(std::size_t degree,
                                       std::span<const Permutation> gens) {
  std::vector<std::int32_t> owner(degree, -1);
  std::vector<std::vector<Point>> out;
  for (std::size_t start = 0; start < degree; ++start) {
    if (owner[start] >= 0) continue;
    const auto id = static_cast<std::int32_t>(out.size());
    std::vector<Point> orb = {static_cast<Point>(start)};
    owner[start] = id;
    for (std::size_t pos = 0; pos < orb.size(); ++pos)
      for (const auto& g : gens) {
        Point y = g(orb[pos]);
        if (owner[y] < 0) {
          owner[y] = id;
          orb.push_back(y);
        }
      }
    std::sort(orb.begin(), orb.end());
    out.push_back(std::move(orb));
  }
  return out;
}

OrbitalColoring orbitals(std::size_t degree, std::span<const Permutation> gens) {
  constexpr std::uint32_t kUnset = 0xffffffffu;
  OrbitalColoring c;
  c.degree = degree;
  c.colors.assign(degree * degree, kUnset);
  std::vector<std::size_t> stack;
  for (std::size_t pair = 0; pair < degree * degree; ++pair) {
    if (c.colors[pair] != kUnset) continue;
    const std::uint32_t color = c.num_colors++;
    c.colors[pair] = color;
    stack.assign(1, pair);
    while (!stack.empty()) {
      std::size_t cur = stack.back();
      stack.pop_back();
      std::size_t i = cur / degree, j = cur % degree;
      for (const auto& g : gens) {
        std::size_t next = static_cast<std::size_t>(g(static_cast<Point>(i))) * degree +
                           g(static_cast<Point>(j));
        if (c.colors[next] == kUnset) {
          c.colors[next] = color;
          stack.push_back(next);
        }
      }
    }
  }
  return c;
}

OrbitalColoring orbitals(const PermGroup& g) {
  return orbitals(g.degree(), g.generators());
}

PermGroup two_closure(const PermGroup& g, const Deadline& deadline) {
  return coloring_automorphisms(orbitals(g), {}, deadline);
}

// ------------------------------------------------------------ Affine maps

Permutation perm_from_affine(const GroupContext& ctx, const AutMatrix& m,
                             std::span<const int> t) {
  if (m.n() != ctx.n() || m.p() != ctx.p())
    throw InputError("matrix context mismatch");
  const Index shift = ctx.to_index(t);
  std::vector<Point> im(ctx.order());
  for (Index i = 0; i < ctx.order(); ++i)
    im[i] = static_cast<Point>(ctx.add(m.apply_index(ctx, i), shift));
  return Permutation(std::move(im));
}

Permutation translation(const GroupContext& ctx, Index t) {
  std::vector<Point> im(ctx.order());
  for (Index i = 0; i < ctx.order(); ++i) im[i] = static_cast<Point>(ctx.add(i, t));
  return Permutation(std::move(im));
}

PermGroup translation_group(const GroupContext& ctx) {
  std::vector<Permutation> gens;
  for (int k = 0; k < ctx.n(); ++k) gens.push_back(translation(ctx, ctx.unit(k)));
  return PermGroup::generate(ctx.order(), std::move(gens));
}

Subspace centralizer_subspace(const GroupContext& ctx,
                              std::span<const AutMatrix> mats) {
  return fixed_subspace(ctx, mats);
}

Permutation induced_on_cosets(const QuotientMap& q, const Permutation& g) {
  const Index count = q.target().order();
  std::vector<Point> im(count);
  for (Index c = 0; c < count; ++c)
    im[c] = static_cast<Point>(q.project(g(static_cast<Point>(q.lift(c)))));
  return Permutation(std::move(im));
}

// ------------------------------------------------- Regular subgroups

namespace {

// Elements of g mapping 0 to each point: element_to[m] = {s * u_m}.
struct CosetTable {
  std::vector<Permutation> stabilizer;         // g_0
  std::vector<std::optional<Permutation>> to;  // some u_m with 0 -> m
};

CosetTable coset_table(const PermGroup& g, std::uint64_t limit,
                       const Deadline& deadline) {
  CosetTable t;
  Point zero[] = {0};
  PermGroup chain = PermGroup::generate(g.degree(), g.generators(), zero, deadline);
  t.to.assign(g.degree(), std::nullopt);
  t.to[0] = Permutation::identity(g.degree());
  // Walk the orbit of 0 to recover transversal elements.
  std::vector<Point> queue = {0};
  for (std::size_t pos = 0; pos < queue.size(); ++pos) {
    Point x = queue[pos];
    for (const auto& s : g.generators()) {
      Point y = s(x);
      if (t.to[y]) continue;
      t.to[y] = *t.to[x] * s;
      queue.push_back(y);
    }
  }
  t.stabilizer = g.point_stabilizer(0, deadline).elements(limit);
  return t;
}

}  // namespace

std::vector<PermGroup> regular_elem_abelian_subgroups(
    const PermGroup& g, const GroupContext& ctx, const Deadline& deadline,
    std::uint64_t limit) {
  const std::size_t deg = ctx.order();
  if (g.degree() != deg) throw InputError("group degree must equal |H|");
  const int p = ctx.p();
  std::vector<PermGroup> found;
  if (!g.is_transitive()) return found;
  CosetTable table = coset_table(g, limit, deadline);

  std::vector<Permutation> chosen;
  std::vector<char> covered(deg, 0);
  std::vector<Point> orbit = {0};
  covered[0] = 1;

  std::function<void()> rec = [&]() {
    deadline.check("regular subgroup search");
    if (orbit.size() == deg) {
      if (static_cast<int>(chosen.size()) == ctx.n())
        found.push_back(PermGroup::generate(deg, chosen));
      return;
    }
    Point m = 0;
    while (covered[m]) ++m;
    for (const auto& s : table.stabilizer) {
      Permutation c = s * *table.to[m];
      if (c.fixed_points() != 0) continue;
      if (!c.pow(p).is_identity()) continue;
      bool commutes = true;
      for (const auto& r : chosen)
        if (!(r * c == c * r)) {
          commutes = false;
          break;
        }
      if (!commutes) continue;
      // Extend the orbit of 0: the new group is the union of the shifts
      // of the current orbit by powers of c.
      const std::size_t old = orbit.size();
      std::vector<Point> added;
      bool free = true;
      Permutation step = c;
      for (int e = 1; e < p && free; ++e) {
        for (std::size_t i = 0; i < old; ++i) {
          Point y = step(orbit[i]);
          if (covered[y]) {
            free = false;
            break;
          }
          covered[y] = 1;
          added.push_back(y);
        }
        step = step * c;
      }
      if (free) {
        orbit.insert(orbit.end(), added.begin(), added.end());
        chosen.push_back(c);
        rec();
        chosen.pop_back();
        orbit.resize(old);
      }
      for (Point y : added) covered[y] = 0;
    }
  };
  rec();
  return found;
}

std::optional<Permutation> subgroup_conjugacy(const PermGroup& g,
                                              const PermGroup& k1,
                                              const PermGroup& k2,
                                              const Deadline& deadline,
                                              std::uint64_t limit) {
  if (k1.degree() != g.degree() || k2.degree() != g.degree())
    throw InputError("degree mismatch");
  if (k1.order() != k2.order()) return std::nullopt;
  const std::size_t deg = g.degree();
  // Orbit sizes must correspond under a conjugator.
  auto orbit_sizes = [deg](const PermGroup& k) {
    std::vector<std::size_t> size(deg);
    for (const auto& o : orbits(deg, k.generators()))
      for (Point x : o) size[x] = o.size();
    return size;
  };
  const auto size1 = orbit_sizes(k1), size2 = orbit_sizes(k2);
  auto try_element = [&](const Permutation& c) {
    for (std::size_t x = 0; x < deg; ++x)
      if (size1[x] != size2[c(static_cast<Point>(x))]) return false;
    for (const auto& x : k1.generators())
      if (!k2.contains(x.conjugate_by(c))) return false;
    return true;
  };
  std::optional<Permutation> result;
  std::uint64_t tick = 0;
  auto visit = [&](const Permutation& c) {
    if (result) return;
    if ((++tick & 1023) == 0) deadline.check("subgroup conjugacy");
    if (try_element(c)) result = c;
  };
  // A transitive k1 lets the conjugator be chosen inside the stabilizer
  // of 0: replace c by kc with k in k1 sending 0 to 0^(c^-1).
  if (deg > 0 && k1.is_transitive())
    g.point_stabilizer(0, deadline).for_each_element(visit, limit);
  else
    g.for_each_element(visit, limit);
  return result;
}

}  // namespace sring
