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

#include "sring/suites.h"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <sstream>

#include "sring/analysis.h"
#include "sring/build.h"
#include "sring/catalog.h"

namespace sring {
namespace {

// One input of a suite: an S-ring with a description that rebuilds it.
struct Case {
  std::string input;
  SRing ring;
  // Generators of the matrix group for transitivity modules, else empty.
  std::vector<AutMatrix> group;
};

std::string describe_set(const GroupContext& ctx, const ElementSet& set) {
  std::ostringstream out;
  out << "p=" << ctx.p() << " n=" << ctx.n() << " set=";
  for (std::size_t i = 0; i < set.size(); ++i) out << (i ? "," : "") << set[i];
  return out.str();
}

std::string describe_group(const GroupContext& ctx,
                           std::span<const AutMatrix> gens) {
  std::ostringstream out;
  out << "p=" << ctx.p() << " n=" << ctx.n() << " gens=";
  for (std::size_t g = 0; g < gens.size(); ++g) {
    out << (g ? "," : "") << "[";
    const Matrix& m = gens[g].matrix();
    for (int r = 0; r < m.n(); ++r)
      for (int c = 0; c < m.n(); ++c)
        out << (r || c ? (c ? " " : ";") : "") << m.at(r, c);
    out << "]";
  }
  return out.str();
}

// Uniform over subsets of H \ {0} of a uniformly random size.
ElementSet random_subset(const GroupContext& ctx, std::mt19937_64& rng) {
  std::vector<Index> pool;
  for (Index h = 1; h < ctx.order(); ++h) pool.push_back(h);
  const std::size_t size = 1 + rng() % pool.size();
  for (std::size_t i = 0; i < size; ++i)
    std::swap(pool[i], pool[i + rng() % (pool.size() - i)]);
  pool.resize(size);
  std::sort(pool.begin(), pool.end());
  return pool;
}

// A small generating set of a matrix group given by its elements.
std::vector<AutMatrix> generators_of(const std::vector<AutMatrix>& elements) {
  std::vector<AutMatrix> gens;
  std::vector<AutMatrix> span;
  const int p = elements.front().p(), n = elements.front().n();
  for (const AutMatrix& g : elements) {
    if (std::binary_search(span.begin(), span.end(), g) || g == AutMatrix::identity(p, n))
      continue;
    gens.push_back(g);
    span = matrix_group_elements(gens, p, n);
  }
  return gens;
}

// Random generated S-rings live over Z_3^3 at p = 3 and Z_p^2 otherwise.
GroupContext generated_context(int p) { return GroupContext(p, p == 3 ? 3 : 2); }

std::vector<Case> generated_cases(int p, std::mt19937_64& rng, std::size_t trials) {
  const GroupContext ctx = generated_context(p);
  std::vector<Case> out;
  for (std::size_t t = 0; t < trials; ++t) {
    ElementSet s = random_subset(ctx, rng);
    out.push_back({describe_set(ctx, s), generated_sring(ctx, s), {}});
  }
  return out;
}

// Transitivity modules of all subgroups of UT(3, p).
std::vector<Case> ut3_cases(int p, const Deadline& deadline) {
  const GroupContext ctx(p, 3);
  std::vector<Case> out;
  for (const auto& group : matrix_subgroups(unitriangular_group(ctx), deadline)) {
    std::vector<AutMatrix> gens =
        group.size() == 1 ? std::vector<AutMatrix>{} : generators_of(group);
    out.push_back({describe_group(ctx, gens), transitivity_module(ctx, gens), gens});
  }
  return out;
}

// Transitivity modules of random subgroups of UT(n, p) with one or two
// generators.
std::vector<Case> random_ut_cases(int p, int n, std::mt19937_64& rng,
                                  std::size_t trials) {
  const GroupContext ctx(p, n);
  std::vector<Case> out;
  for (std::size_t t = 0; t < trials; ++t) {
    std::vector<AutMatrix> gens;
    const std::size_t count = 1 + rng() % 2;
    for (std::size_t k = 0; k < count; ++k) gens.push_back(random_unitriangular(p, n, rng));
    out.push_back({describe_group(ctx, gens), transitivity_module(ctx, gens), gens});
  }
  return out;
}

// p-S-rings: every UT(3, p)-module plus random UT(4, 3)-modules at p = 3.
std::vector<Case> p_sring_cases(int p, std::mt19937_64& rng, std::size_t trials,
                                const Deadline& deadline) {
  std::vector<Case> out = ut3_cases(p, deadline);
  if (p == 3) {
    auto more = random_ut_cases(p, 4, rng, trials);
    std::move(more.begin(), more.end(), std::back_inserter(out));
  }
  return out;
}

bool is_class(const SRing& a, const ElementSet& sorted_set) {
  return a.classes()[a.class_of(sorted_set.front())] == sorted_set;
}

ElementSet shifted(const GroupContext& ctx, const ElementSet& set, Index by) {
  ElementSet out;
  for (Index h : set) out.push_back(ctx.add(h, by));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Permutation> matrix_perms(const GroupContext& ctx,
                                      std::span<const AutMatrix> gens) {
  std::vector<Permutation> out;
  const std::vector<int> zero(ctx.n(), 0);
  for (const AutMatrix& m : gens) out.push_back(perm_from_affine(ctx, m, zero));
  return out;
}

// H_R extended by the matrix group.
PermGroup affine_group(const GroupContext& ctx, std::span<const AutMatrix> gens,
                       const Deadline& deadline) {
  std::vector<Permutation> all = translation_group(ctx).generators();
  for (Permutation& g : matrix_perms(ctx, gens)) all.push_back(std::move(g));
  return PermGroup::generate(ctx.order(), std::move(all), {}, deadline);
}

std::vector<Permutation> center_elements(const PermGroup& g) {
  std::vector<Permutation> out;
  g.for_each_element([&](const Permutation& x) {
    for (const Permutation& s : g.generators())
      if (!(x * s == s * x)) return;
    out.push_back(x);
  });
  return out;
}

class Runner {
 public:
  Runner(SuiteReport& report, const Deadline& deadline)
      : report_(report), deadline_(deadline) {}

  // Runs one case, turning a LimitError into a skip.
  void run(const std::string& input, const std::function<void()>& body) {
    deadline_.check("property suite");
    current_ = input;
    ++report_.cases;
    try {
      body();
    } catch (const LimitError&) {
      ++report_.skipped;
    }
  }

  void expect(bool ok, const std::string& message) {
    if (!ok) report_.failures.push_back({current_, message});
  }

 private:
  SuiteReport& report_;
  const Deadline& deadline_;
  std::string current_;
};

struct Context {
  int p;
  std::mt19937_64& rng;
  std::size_t trials;
  const Deadline& deadline;
  Runner& run;
};

// ------------------------------------------------------------------ suites

void schur_multiplier(Context& c) {
  auto cases = generated_cases(c.p, c.rng, c.trials);
  auto ut = ut3_cases(c.p, c.deadline);
  std::move(ut.begin(), ut.end(), std::back_inserter(cases));
  for (const Case& k : cases)
    c.run.run(k.input, [&] {
      const GroupContext& ctx = k.ring.context();
      for (int m = 2; m < ctx.p(); ++m)
        for (const ElementSet& cls : k.ring.classes()) {
          ElementSet image;
          for (Index h : cls) image.push_back(ctx.scale(m, h));
          std::sort(image.begin(), image.end());
          c.run.expect(is_class(k.ring, image),
                       std::to_string(m) + "T is not a class for T starting at " +
                           std::to_string(cls.front()));
        }
    });
}

void radical_span_subgroups(Context& c) {
  auto cases = generated_cases(c.p, c.rng, c.trials);
  for (const Case& k : cases)
    c.run.run(k.input, [&] {
      const GroupContext& ctx = k.ring.context();
      for (const ElementSet& cls : k.ring.classes()) {
        c.run.expect(is_a_subgroup(k.ring, radical(ctx, cls)),
                     "rad(T) not an A-subgroup for T starting at " +
                         std::to_string(cls.front()));
        c.run.expect(is_a_subgroup(k.ring, span_subgroup(ctx, cls)),
                     "<T> not an A-subgroup for T starting at " +
                         std::to_string(cls.front()));
      }
    });
}

void et_shift(Context& c) {
  auto cases = generated_cases(c.p, c.rng, c.trials);
  auto ut = ut3_cases(c.p, c.deadline);
  std::move(ut.begin(), ut.end(), std::back_inserter(cases));
  for (const Case& k : cases)
    c.run.run(k.input, [&] {
      const GroupContext& ctx = k.ring.context();
      const ElementSet thin = thin_radical(k.ring).elements(ctx);
      for (Index e : thin)
        for (const ElementSet& cls : k.ring.classes())
          c.run.expect(is_class(k.ring, shifted(ctx, cls, e)),
                       std::to_string(e) + "+T is not a class for T starting at " +
                           std::to_string(cls.front()));
    });
}

void coset_profile(Context& c) {
  auto cases = generated_cases(c.p, c.rng, c.trials);
  auto ut = ut3_cases(c.p, c.deadline);
  std::move(ut.begin(), ut.end(), std::back_inserter(cases));
  for (const Case& k : cases)
    c.run.run(k.input, [&] {
      for (const Subspace& sub : a_subgroups(k.ring))
        for (ClassId t = 0; t < k.ring.rank(); ++t) {
          try {
            const std::size_t count = coset_intersection_profile(k.ring, sub, t);
            c.run.expect(k.ring.classes()[t].size() % count == 0,
                         "profile does not divide |T|");
          } catch (const InputError& e) {
            c.run.expect(false, e.what());
          }
        }
    });
}

void ps_thin_radical(Context& c) {
  for (const Case& k : p_sring_cases(c.p, c.rng, c.trials, c.deadline))
    c.run.run(k.input, [&] {
      c.run.expect(is_p_sring(k.ring), "not a p-S-ring");
      c.run.expect(thin_radical(k.ring).dim() > 0, "thin radical is trivial");
    });
}

void ps_chain(Context& c) {
  for (const Case& k : p_sring_cases(c.p, c.rng, c.trials, c.deadline))
    c.run.run(k.input, [&] {
      const std::vector<Subspace> chain = subgroup_chain(k.ring);
      const int n = k.ring.context().n();
      bool ok = static_cast<int>(chain.size()) == n + 1;
      for (std::size_t i = 0; ok && i < chain.size(); ++i)
        ok = chain[i].dim() == static_cast<int>(i) && is_a_subgroup(k.ring, chain[i]) &&
             (i == 0 || chain[i].contains(chain[i - 1]));
      c.run.expect(ok, "no index-p chain of A-subgroups");
    });
}

void hm5_wreath(Context& c) {
  for (const Case& k : p_sring_cases(c.p, c.rng, c.trials, c.deadline))
    c.run.run(k.input, [&] {
      const GroupContext& ctx = k.ring.context();
      const Index big = ctx.order() / ctx.p();
      const auto sizes = k.ring.size_profile();
      if (std::find(sizes.begin(), sizes.end(), big) == sizes.end()) return;
      bool found = false;
      for (const Subspace& sub : a_subgroups(k.ring))
        if (sub.dim() == ctx.n() - 1 && is_wedge_witness(k.ring, sub, sub)) found = true;
      c.run.expect(found, "class of size |H|/p but no index-p wreath split");
      c.run.expect(decomposability_witness(k.ring).has_value(),
                   "class of size |H|/p but no decomposability witness");
    });
}

void lemma_ps2(Context& c) {
  for (const Case& k : p_sring_cases(c.p, c.rng, c.trials, c.deadline))
    c.run.run(k.input, [&] {
      const SRing& a = k.ring;
      const GroupContext& ctx = a.context();
      const auto subs = a_subgroups(a);
      const Subspace thin = thin_radical(a);
      for (const Subspace& sub : subs) {
        if (sub.dim() != ctx.n() - 1) continue;
        const QuotientMap q(ctx, sub);
        const std::size_t thin_in_k = subspace_intersection(thin, sub).order();
        for (const ElementSet& cls : a.classes()) {
          const Subspace rad = radical(ctx, cls);
          // (i)
          bool one_coset = std::all_of(cls.begin(), cls.end(), [&](Index h) {
            return q.project(h) == q.project(cls.front());
          });
          c.run.expect(one_coset && sub.contains(rad),
                       "(i) class starting at " + std::to_string(cls.front()) +
                           " meets two K-cosets");
          // (iii)
          if (thin_in_k * cls.size() > ctx.order() / ctx.p())
            c.run.expect(subspace_intersection(thin, rad).dim() > 0,
                         "(iii) thin radical meets rad(T) trivially for T starting at " +
                             std::to_string(cls.front()));
        }
      }
      // (ii)
      for (const Subspace& line : subs) {
        if (line.dim() != 1) continue;
        const ElementSet members = line.elements(ctx);
        for (const ElementSet& cls : a.classes()) {
          if (radical(ctx, cls).contains(line)) continue;
          for (Index h : cls) {
            std::size_t hits = 0;
            for (Index w : members) hits += a.class_of(ctx.add(h, w)) == a.class_of(h);
            c.run.expect(hits == 1, "(ii) |h+L meet T| != 1 at h=" + std::to_string(h));
          }
        }
      }
    });
}

void kernel_suite(Context& c) {
  std::vector<Case> cases = p_sring_cases(c.p, c.rng, c.trials, c.deadline);
  cases.insert(cases.begin(), Case{"exceptional p=" + std::to_string(c.p),
                                   exceptional_sring(c.p), {}});
  for (const Case& k : cases)
    c.run.run(k.input, [&] {
      if (decomposability_witness(k.ring)) return;
      const GroupContext& ctx = k.ring.context();
      for (const Subspace& w : a_subgroups(k.ring)) {
        if (w.dim() != 1) continue;
        const PermGroup kernel = kernel_on_quotient(k.ring, w, c.deadline);
        bool ok = kernel.order() == ctx.p();
        for (Index x : w.elements(ctx)) ok = ok && kernel.contains(translation(ctx, x));
        c.run.expect(ok, "kernel on H/W is not W_R (order " +
                             kernel.order().str() + ")");
      }
    });
}

// Permutation groups used by the closure suites: H_R extended by a
// unitriangular group (transitive), and the matrix group alone (fixes 0).
struct GroupCase {
  std::string input;
  GroupContext ctx;
  std::vector<AutMatrix> matrices;
  PermGroup group;
};

std::vector<GroupCase> group_cases(Context& c) {
  std::vector<GroupCase> out;
  for (const Case& k : p_sring_cases(c.p, c.rng, c.trials, c.deadline)) {
    const GroupContext& ctx = k.ring.context();
    out.push_back({"affine " + k.input, ctx, k.group,
                   affine_group(ctx, k.group, c.deadline)});
    if (!k.group.empty())
      out.push_back({"linear " + k.input, ctx, k.group,
                     PermGroup::generate(ctx.order(), matrix_perms(ctx, k.group), {},
                                         c.deadline)});
  }
  return out;
}

void center_g2(Context& c) {
  for (const GroupCase& g : group_cases(c))
    c.run.run(g.input, [&] {
      const PermGroup closure = two_closure(g.group, c.deadline);
      for (const Permutation& z : center_elements(g.group))
        for (const Permutation& s : closure.generators())
          c.run.expect(z * s == s * z, "central element does not centralize G^(2)");
    });
}

void p_closure(Context& c) {
  for (const GroupCase& g : group_cases(c))
    c.run.run(g.input, [&] {
      c.run.expect(g.group.is_p_group(c.p), "input is not a p-group");
      c.run.expect(two_closure(g.group, c.deadline).is_p_group(c.p),
                   "2-closure is not a p-group");
    });
}

void hm1_quotient_closure(Context& c) {
  for (const Case& k : p_sring_cases(c.p, c.rng, c.trials, c.deadline))
    c.run.run(k.input, [&] {
      const GroupContext& ctx = k.ring.context();
      const PermGroup g = affine_group(ctx, k.group, c.deadline);
      const PermGroup closure = two_closure(g, c.deadline);
      // A-subgroups of V(H, A) are A-invariant, so their cosets are blocks.
      for (const Subspace& w : a_subgroups(k.ring)) {
        if (w.dim() == 0 || w.dim() == ctx.n()) continue;
        const QuotientMap q(ctx, w);
        std::vector<Permutation> on_blocks;
        for (const Permutation& s : g.generators()) on_blocks.push_back(induced_on_cosets(q, s));
        const PermGroup quotient_closure = two_closure(
            PermGroup::generate(q.target().order(), on_blocks, {}, c.deadline), c.deadline);
        for (const Permutation& s : closure.generators())
          c.run.expect(quotient_closure.contains(induced_on_cosets(q, s)),
                       "(G^(2))^delta not inside (G^delta)^(2) for W of dim " +
                           std::to_string(w.dim()));
      }
    });
}

void hm2_orbit(Context& c) {
  std::vector<Case> cases = ut3_cases(c.p, c.deadline);
  cases.insert(cases.begin(), Case{"exceptional p=" + std::to_string(c.p),
                                   exceptional_sring(c.p), {}});
  for (const Case& k : cases)
    c.run.run(k.input, [&] {
      const GroupContext& ctx = k.ring.context();
      const bool has_orbit = std::any_of(
          k.ring.classes().begin(), k.ring.classes().end(), [&](const ElementSet& cls) {
            return static_cast<int>(cls.size()) == ctx.p() &&
                   span_subgroup(ctx, cls).dim() == ctx.n();
          });
      if (!has_orbit) return;
      const BigInt expected = BigInt(ctx.order()) * ctx.p();
      const PermGroup aut = aut_group(k.ring, c.deadline);
      if (is_schurian(k.ring, aut))
        c.run.expect(aut.order() == expected, "|Aut(A)| = " + aut.order().str());
      if (!k.group.empty()) {
        const PermGroup g = affine_group(ctx, k.group, c.deadline);
        c.run.expect(g.order() == expected, "|H_R A| = " + g.order().str());
      }
    });
}

void teq_z34(Context& c) {
  if (c.p != 3) throw InputError("teq-z34 supports p=3 only");
  // Draw until `trials` indecomposable Schurian modules have been tested.
  std::size_t tested = 0;
  for (std::size_t attempt = 0; tested < c.trials && attempt < 50 * c.trials; ++attempt) {
    Case k = std::move(random_ut_cases(c.p, 4, c.rng, 1).front());
    if (decomposability_witness(k.ring)) continue;
    ++tested;
    c.run.run(k.input, [&] {
      if (!is_schurian(k.ring, c.deadline)) return;
      c.run.expect(teq_minimal(k.ring, c.deadline), "not teq-minimal");
    });
  }
}

void ci_z33(Context& c) {
  const GroupContext ctx(c.p, 3);
  for (std::size_t t = 0; t < c.trials; ++t) {
    ElementSet s = random_subset(ctx, c.rng);
    c.run.run(describe_set(ctx, s), [&] {
      c.run.expect(is_ci_subset(ctx, s, c.deadline).ci, "not a CI-subset");
    });
  }
}

void ll_suite(Context& c) {
  const Ll2Ring ll = ll2_sring(c.p);
  const SRing& b = ll.ring;
  const GroupContext& ctx = b.context();
  c.run.run("ll2 p=" + std::to_string(c.p), [&] {
    const Subspace fixed = fixed_subspace(ctx, ll.group);
    c.run.expect(fixed.dim() == 3, "C_H(L) does not have order p^3");
    c.run.expect(matrix_group_elements(ll.group, c.p, 5).size() ==
                     static_cast<std::size_t>(c.p * c.p),
                 "|L| != p^2");
    // Indecomposable.
    c.run.expect(!decomposability_witness(b).has_value(), "V(H,L) is decomposable");
    // Nontrivial classes are cosets of order-p^2 subgroups of C_H(L).
    for (const ElementSet& cls : b.classes()) {
      if (cls.size() == 1) continue;
      ElementSet diff;
      for (Index h : cls) diff.push_back(ctx.sub(h, cls.front()));
      const Subspace x = span_subgroup(ctx, diff);
      c.run.expect(x.order() == diff.size() && x.dim() == 2 && fixed.contains(x),
                   "class starting at " + std::to_string(cls.front()) +
                       " is not a coset of an order-p^2 subgroup of C_H(L)");
    }
    // Classes spanning different subgroups modulo C_H(L) have different radicals.
    for (const ElementSet& t1 : b.classes())
      for (const ElementSet& t2 : b.classes()) {
        if (t1.size() != static_cast<std::size_t>(c.p * c.p) || t1.size() != t2.size() ||
            t1.front() >= t2.front())
          continue;
        const Subspace s1 = subspace_sum(span_subgroup(ctx, t1), fixed);
        const Subspace s2 = subspace_sum(span_subgroup(ctx, t2), fixed);
        if (s1 != s2)
          c.run.expect(radical(ctx, t1) != radical(ctx, t2),
                       "equal radicals for classes at " + std::to_string(t1.front()) +
                           " and " + std::to_string(t2.front()));
      }
    // |Aut| = p^8.
    const PermGroup aut = aut_group(b, c.deadline);
    c.run.expect(aut.order() == boost::multiprecision::pow(BigInt(c.p), 8),
                 "|Aut(V(H,L))| = " + aut.order().str());
    // CI, with exactly p regular subgroups.
    const CiResult ci = is_ci_sring(b, c.deadline);
    c.run.expect(ci.ci, "V(H,L) is not CI");
    c.run.expect(ci.regular_subgroups.size() == static_cast<std::size_t>(c.p),
                 "expected p regular subgroups, found " +
                     std::to_string(ci.regular_subgroups.size()));
  });
}

using SuiteFn = void (*)(Context&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> suites = {
      {"schur-multiplier", schur_multiplier},
      {"radical-span-subgroups", radical_span_subgroups},
      {"eT-shift", et_shift},
      {"coset-profile", coset_profile},
      {"pS-thin-radical", ps_thin_radical},
      {"pS-chain", ps_chain},
      {"hm5-wreath", hm5_wreath},
      {"L-p-S2", lemma_ps2},
      {"kernel", kernel_suite},
      {"center-G2", center_g2},
      {"p-closure", p_closure},
      {"hm1-quotient-closure", hm1_quotient_closure},
      {"hm2-orbit", hm2_orbit},
      {"teq-z34", teq_z34},
      {"ci-z33", ci_z33},
      {"ll-suite", ll_suite},
  };
  return suites;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : registry()) out.push_back(name);
    return out;
  }();
  return names;
}

SuiteReport verify_suite(std::string_view name, int p, std::uint64_t seed,
                         std::size_t trials, const Deadline& deadline) {
  const auto& suites = registry();
  auto it = std::find_if(suites.begin(), suites.end(),
                         [&](const auto& entry) { return entry.first == name; });
  if (it == suites.end()) throw InputError("unknown suite: " + std::string(name));
  if (p != 3 && p != 5) throw InputError("suites support p=3 and p=5");

  const auto start = std::chrono::steady_clock::now();
  SuiteReport report;
  report.name = it->first;
  report.p = p;
  report.seed = seed;
  report.trials = trials;
  std::mt19937_64 rng(seed);
  Runner runner(report, deadline);
  Context context{p, rng, trials, deadline, runner};
  it->second(context);
  report.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace sring
