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

#include "sring/catalog.h"

#include <algorithm>
#include <deque>
#include <set>

#include "sring/build.h"
#include "sring/serialize.h"

namespace sring {
namespace {

void require_odd_prime(int p, int max_p, const char* what) {
  if (!is_prime(p) || p == 2 || p > max_p)
    throw InputError(std::string(what) + ": unsupported p=" + std::to_string(p));
}

Subspace unit_span(const GroupContext& ctx, int first, int count) {
  std::vector<Vector> rows;
  for (int k = first; k < first + count; ++k) {
    Vector v(ctx.n(), 0);
    v[k] = 1;
    rows.push_back(std::move(v));
  }
  return Subspace::span(ctx, rows);
}

// Q E wr Q H/E, with E spanned by the first `dim` unit vectors.
SRing plain_wreath(const GroupContext& ctx, int dim) {
  const Subspace e = unit_span(ctx, 0, dim);
  SubspaceEmbedding embed(ctx, e);
  QuotientMap quotient(ctx, e);
  return wreath_sring(SRing::full_group_algebra(embed.local()),
                      SRing::full_group_algebra(quotient.target()), e);
}

}  // namespace

SRing exceptional_sring(int p) {
  require_odd_prime(p, 7, "exceptional_sring");
  GroupContext ctx(p, 3);
  const AutMatrix jordan(Matrix(p, 3, {1, 1, 0, 0, 1, 1, 0, 0, 1}));
  return transitivity_module(ctx, std::span(&jordan, 1));
}

Ll2Ring ll2_sring(int p) {
  require_odd_prime(p, 5, "ll2_sring");
  GroupContext ctx(p, 5);
  Matrix x = Matrix::identity(p, 5);
  Matrix y = Matrix::identity(p, 5);
  x.set(0, 2, 1);
  x.set(1, 3, 1);
  y.set(0, 3, 1);
  y.set(1, 4, 1);
  std::vector<AutMatrix> group = {AutMatrix(x), AutMatrix(y)};
  return Ll2Ring{transitivity_module(ctx, group), std::move(group)};
}

std::vector<SRing> table1_reference_rings(int p) {
  require_odd_prime(p, 7, "table1_reference_rings");
  GroupContext ctx(p, 3);
  std::vector<SRing> rows;
  rows.push_back(SRing::full_group_algebra(ctx));
  rows.push_back(plain_wreath(ctx, 2));
  rows.push_back(plain_wreath(ctx, 1));

  const Subspace e = unit_span(ctx, 0, 2);
  const Subspace f = unit_span(ctx, 2, 1);
  SubspaceEmbedding embed_e(ctx, e);
  SubspaceEmbedding embed_f(ctx, f);
  const SRing inner = plain_wreath(embed_e.local(), 1);
  rows.push_back(tensor_sring(inner, SRing::full_group_algebra(embed_f.local()),
                              e, f));
  QuotientMap quotient(ctx, e);
  rows.push_back(
      wreath_sring(inner, SRing::full_group_algebra(quotient.target()), e));
  rows.push_back(exceptional_sring(p));
  return rows;
}

std::vector<AutMatrix> matrix_group_elements(std::span<const AutMatrix> gens,
                                             int p, int n) {
  std::set<AutMatrix> seen = {AutMatrix::identity(p, n)};
  std::deque<AutMatrix> queue = {AutMatrix::identity(p, n)};
  while (!queue.empty()) {
    AutMatrix g = std::move(queue.front());
    queue.pop_front();
    for (const AutMatrix& s : gens) {
      AutMatrix next = g * s;
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
  }
  return {seen.begin(), seen.end()};
}

std::vector<std::vector<AutMatrix>> matrix_subgroups(
    std::span<const AutMatrix> elements, const Deadline& deadline) {
  if (elements.empty()) return {};
  const int p = elements.front().p(), n = elements.front().n();
  std::vector<std::vector<AutMatrix>> out = {{AutMatrix::identity(p, n)}};
  std::set<std::vector<AutMatrix>> seen(out.begin(), out.end());
  // Every subgroup is reached from a smaller one by adding one element.
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (const AutMatrix& g : elements) {
      deadline.check("matrix subgroup enumeration");
      if (std::binary_search(out[i].begin(), out[i].end(), g)) continue;
      std::vector<AutMatrix> gens = out[i];
      gens.push_back(g);
      std::vector<AutMatrix> group = matrix_group_elements(gens, p, n);
      if (seen.insert(group).second) out.push_back(std::move(group));
    }
  }
  return out;
}

AutMatrix random_unitriangular(int p, int n, std::mt19937_64& rng) {
  Matrix m = Matrix::identity(p, n);
  for (int r = 0; r < n; ++r)
    for (int c = r + 1; c < n; ++c) m.set(r, c, static_cast<int>(rng() % p));
  return AutMatrix(std::move(m));
}

bool ClassificationReport::matches_table() const {
  if (classes.size() != kTable1Rows) return false;
  std::vector<int> rows;
  for (const auto& c : classes) {
    if (!c.schurian) return false;
    // Only the first and last rows are indecomposable.
    const bool indecomposable_row = c.row == 1 || c.row == 6;
    if (c.fingerprint.decomposable == indecomposable_row) return false;
    rows.push_back(c.row);
  }
  std::sort(rows.begin(), rows.end());
  return rows == std::vector<int>{1, 2, 3, 4, 5, 6};
}

ClassificationReport build_table1(int p, const Deadline& deadline) {
  require_odd_prime(p, 5, "build_table1");
  GroupContext ctx(p, 3);
  ClassificationReport report;
  report.p = p;
  report.n = 3;

  const std::vector<AutMatrix> ut = unitriangular_group(ctx);
  const auto subgroups = matrix_subgroups(ut, deadline);
  report.total_inputs = subgroups.size();

  struct Bucket {
    SRing representative;
    std::string text;
    Fingerprint fingerprint;
    std::size_t members = 0;
  };
  std::vector<Bucket> buckets;
  for (const auto& group : subgroups) {
    deadline.check("table classification");
    SRing module = transitivity_module(ctx, group);
    Fingerprint fp = fingerprint(module);
    std::string text = format_sring(module);
    auto home = std::find_if(buckets.begin(), buckets.end(), [&](const Bucket& b) {
      return b.fingerprint == fp &&
             cayley_isomorphic(module, b.representative, deadline).has_value();
    });
    if (home == buckets.end()) {
      buckets.push_back(Bucket{module, text, fp, 1});
      continue;
    }
    ++home->members;
    if (text < home->text) {
      home->representative = std::move(module);
      home->text = std::move(text);
    }
  }

  const std::vector<SRing> references = table1_reference_rings(p);
  for (const Bucket& b : buckets) {
    ClassificationClass c{b.representative, b.fingerprint,
                          is_schurian(b.representative, deadline), b.members, 0};
    for (std::size_t r = 0; r < references.size(); ++r)
      if (fingerprint(references[r]) == c.fingerprint &&
          cayley_isomorphic(references[r], c.representative, deadline)) {
        c.row = static_cast<int>(r + 1);
        break;
      }
    report.classes.push_back(std::move(c));
  }
  std::sort(report.classes.begin(), report.classes.end(),
            [](const ClassificationClass& x, const ClassificationClass& y) {
              if (x.fingerprint.rank != y.fingerprint.rank)
                return x.fingerprint.rank > y.fingerprint.rank;
              return format_sring(x.representative) <
                     format_sring(y.representative);
            });
  return report;
}

}  // namespace sring
