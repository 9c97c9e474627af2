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

#include "sring/gfp.h"

#include <algorithm>
#include <numeric>
#include <string>

namespace sring {
namespace {

int mod(long long x, int p) {
  long long r = x % p;
  return static_cast<int>(r < 0 ? r + p : r);
}

int inv_mod(int a, int p) {
  // p is prime: a^(p-2).
  long long result = 1, base = a % p;
  for (int e = p - 2; e > 0; e >>= 1) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
  }
  return static_cast<int>(result);
}

int lowest_nonzero(const Vector& v) {
  for (size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) return static_cast<int>(i);
  return -1;
}

}  // namespace

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::uint64_t ipow(std::uint64_t base, int exp) {
  std::uint64_t r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

GroupContext::GroupContext(int p, int n) : p_(p), n_(n) {
  if (!is_prime(p) || p < 3)
    throw InputError("modulus must be an odd prime, got " + std::to_string(p));
  if (n < 0 || n > kMaxRank)
    throw InputError("rank must lie in [0, " + std::to_string(kMaxRank) +
                     "], got " + std::to_string(n));
  std::uint64_t order = ipow(p, n);
  if (order > (1u << 24)) throw LimitError("group order too large");
  order_ = static_cast<Index>(order);
  pow_.resize(n + 1);
  pow_[0] = 1;
  for (int k = 1; k <= n; ++k) pow_[k] = pow_[k - 1] * p;

  auto tables = std::make_shared<Tables>();
  tables->neg.resize(order_);
  for (Index i = 0; i < order_; ++i) {
    Index r = 0;
    for (int k = 0; k < n; ++k) {
      int c = (i / pow_[k]) % p;
      r += static_cast<Index>((p - c) % p) * pow_[k];
    }
    tables->neg[i] = r;
  }
  tables_ = tables;
  // Dense addition table while it stays small.
  if (order_ <= 2187) {
    tables->add.resize(static_cast<size_t>(order_) * order_);
    for (Index a = 0; a < order_; ++a)
      for (Index b = 0; b < order_; ++b)
        tables->add[a * order_ + b] = add_slow(a, b);
  }
}

Index GroupContext::add_slow(Index a, Index b) const {
  Index r = 0;
  for (int k = 0; k < n_; ++k) {
    int c = static_cast<int>((a / pow_[k]) % p_ + (b / pow_[k]) % p_);
    if (c >= p_) c -= p_;
    r += static_cast<Index>(c) * pow_[k];
  }
  return r;
}

Index GroupContext::to_index(std::span<const int> v) const {
  if (static_cast<int>(v.size()) != n_)
    throw InputError("vector length " + std::to_string(v.size()) +
                     " does not match rank " + std::to_string(n_));
  Index r = 0;
  for (int k = 0; k < n_; ++k) {
    if (v[k] < 0 || v[k] >= p_)
      throw InputError("coordinate out of range: " + std::to_string(v[k]));
    r += static_cast<Index>(v[k]) * pow_[k];
  }
  return r;
}

Vector GroupContext::to_vector(Index i) const {
  if (i >= order_)
    throw InputError("index out of range: " + std::to_string(i));
  Vector v(n_);
  for (int k = 0; k < n_; ++k) v[k] = static_cast<int>((i / pow_[k]) % p_);
  return v;
}

int GroupContext::coordinate(Index i, int k) const {
  return static_cast<int>((i / pow_[k]) % p_);
}

Index GroupContext::scale(int k, Index a) const {
  int f = mod(k, p_);
  Index r = 0;
  for (int j = 0; j < n_; ++j)
    r += static_cast<Index>(coordinate(a, j) * f % p_) * pow_[j];
  return r;
}

void require_same_context(const GroupContext& a, const GroupContext& b) {
  if (!(a == b)) throw InputError("group contexts differ");
}

std::vector<Vector> row_reduce(int p, std::vector<Vector> rows) {
  std::vector<Vector> out;
  if (rows.empty()) return out;
  const size_t width = rows.front().size();
  for (auto& r : rows) {
    if (r.size() != width) throw InputError("row length mismatch");
    for (int& x : r) x = mod(x, p);
  }
  size_t lead = 0;
  for (size_t col = 0; col < width && lead < rows.size(); ++col) {
    size_t pivot = lead;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[lead], rows[pivot]);
    int inv = inv_mod(rows[lead][col], p);
    for (int& x : rows[lead]) x = x * inv % p;
    for (size_t r = 0; r < rows.size(); ++r) {
      if (r == lead || rows[r][col] == 0) continue;
      int f = rows[r][col];
      for (size_t c = 0; c < width; ++c)
        rows[r][c] = mod(rows[r][c] - f * rows[lead][c], p);
    }
    ++lead;
  }
  rows.resize(lead);
  return rows;
}

// ---------------------------------------------------------------- Subspace

Subspace::Subspace(int p, int n, std::vector<Vector> basis)
    : p_(p), n_(n), basis_(std::move(basis)) {
  pivots_.reserve(basis_.size());
  for (const auto& row : basis_) pivots_.push_back(lowest_nonzero(row));
}

Subspace Subspace::span(const GroupContext& ctx,
                        std::span<const Vector> vectors) {
  std::vector<Vector> rows(vectors.begin(), vectors.end());
  for (const auto& v : rows)
    if (static_cast<int>(v.size()) != ctx.n())
      throw InputError("vector dimension does not match the group rank");
  return Subspace(ctx.p(), ctx.n(), row_reduce(ctx.p(), std::move(rows)));
}

Subspace Subspace::span_of_indices(const GroupContext& ctx,
                                   std::span<const Index> elements) {
  std::vector<Vector> rows;
  rows.reserve(elements.size());
  for (Index e : elements) rows.push_back(ctx.to_vector(e));
  return span(ctx, rows);
}

Subspace Subspace::trivial(const GroupContext& ctx) {
  return Subspace(ctx.p(), ctx.n(), {});
}

Subspace Subspace::full(const GroupContext& ctx) {
  std::vector<Vector> rows;
  for (int k = 0; k < ctx.n(); ++k) {
    Vector v(ctx.n(), 0);
    v[k] = 1;
    rows.push_back(std::move(v));
  }
  return Subspace(ctx.p(), ctx.n(), std::move(rows));
}

Vector Subspace::reduce(std::span<const int> v) const {
  Vector r(v.begin(), v.end());
  for (auto& x : r) x = mod(x, p_);
  for (size_t i = 0; i < basis_.size(); ++i) {
    int f = r[pivots_[i]];
    if (f == 0) continue;
    for (int c = 0; c < n_; ++c) r[c] = mod(r[c] - f * basis_[i][c], p_);
  }
  return r;
}

bool Subspace::contains(std::span<const int> v) const {
  if (static_cast<int>(v.size()) != n_) throw InputError("dimension mismatch");
  Vector r = reduce(v);
  return std::all_of(r.begin(), r.end(), [](int x) { return x == 0; });
}

bool Subspace::contains_index(const GroupContext& ctx, Index i) const {
  return contains(ctx.to_vector(i));
}

bool Subspace::contains(const Subspace& other) const {
  if (other.n_ != n_ || other.p_ != p_) throw InputError("context mismatch");
  return std::all_of(other.basis_.begin(), other.basis_.end(),
                     [&](const Vector& v) { return contains(v); });
}

Vector Subspace::coordinates(std::span<const int> v) const {
  Vector c(basis_.size());
  for (size_t i = 0; i < basis_.size(); ++i) c[i] = mod(v[pivots_[i]], p_);
  return c;
}

Vector Subspace::combine(std::span<const int> coords) const {
  if (coords.size() != basis_.size()) throw InputError("coordinate count");
  Vector v(n_, 0);
  for (size_t i = 0; i < basis_.size(); ++i)
    for (int c = 0; c < n_; ++c) v[c] = (v[c] + coords[i] * basis_[i][c]) % p_;
  return v;
}

ElementSet Subspace::elements(const GroupContext& ctx) const {
  if (ctx.p() != p_ || ctx.n() != n_) throw InputError("context mismatch");
  ElementSet out;
  const Index count = order();
  out.reserve(count);
  Vector coords(basis_.size(), 0);
  for (Index k = 0; k < count; ++k) {
    Index rest = k;
    for (auto& c : coords) {
      c = static_cast<int>(rest % p_);
      rest /= p_;
    }
    out.push_back(ctx.to_index(combine(coords)));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::strong_ordering operator<=>(const Subspace& a, const Subspace& b) {
  if (auto c = a.dim() <=> b.dim(); c != 0) return c;
  return a.basis_ <=> b.basis_;
}

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
  if (a.ambient_rank() != b.ambient_rank() || a.p() != b.p())
    throw InputError("context mismatch");
  GroupContext ctx(a.p(), a.ambient_rank());
  std::vector<Vector> rows = a.basis();
  rows.insert(rows.end(), b.basis().begin(), b.basis().end());
  return Subspace::span(ctx, rows);
}

Subspace subspace_intersection(const Subspace& a, const Subspace& b) {
  if (a.ambient_rank() != b.ambient_rank() || a.p() != b.p())
    throw InputError("context mismatch");
  // Zassenhaus: rows (a | a) and (b | 0); rows whose left half vanishes
  // carry the intersection in their right half.
  const int n = a.ambient_rank();
  std::vector<Vector> rows;
  for (const auto& v : a.basis()) {
    Vector r(v);
    r.insert(r.end(), v.begin(), v.end());
    rows.push_back(std::move(r));
  }
  for (const auto& v : b.basis()) {
    Vector r(v);
    r.resize(2 * n, 0);
    rows.push_back(std::move(r));
  }
  std::vector<Vector> inter;
  for (auto& r : row_reduce(a.p(), std::move(rows))) {
    if (std::all_of(r.begin(), r.begin() + n, [](int x) { return x == 0; }))
      inter.emplace_back(r.begin() + n, r.end());
  }
  return Subspace::span(GroupContext(a.p(), n), inter);
}

LatticeOps subspace_lattice_ops(const Subspace& a, const Subspace& b) {
  return {subspace_sum(a, b), subspace_intersection(a, b), a.contains(b)};
}

std::uint64_t gaussian_binomial(int p, int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t num = 1, den = 1;
  for (int i = 0; i < k; ++i) {
    num *= ipow(p, n - i) - 1;
    den *= ipow(p, i + 1) - 1;
  }
  return num / den;
}

std::vector<Subspace> enumerate_subspaces(const GroupContext& ctx, int dim) {
  const int n = ctx.n(), p = ctx.p();
  if (dim < 0 || dim > n) throw InputError("dimension out of range");
  if (gaussian_binomial(p, n, dim) > kMaxEnumeratedSubspaces)
    throw LimitError("too many subspaces to enumerate");
  std::vector<Subspace> out;
  // Choose pivot columns, then fill the free entries of each row: columns
  // to the right of the row's pivot that are not pivots themselves.
  std::vector<int> pivots(dim);
  std::iota(pivots.begin(), pivots.end(), 0);
  while (true) {
    std::vector<std::pair<int, int>> free_cells;
    for (int r = 0; r < dim; ++r)
      for (int c = pivots[r] + 1; c < n; ++c)
        if (std::find(pivots.begin(), pivots.end(), c) == pivots.end())
          free_cells.emplace_back(r, c);
    const std::uint64_t fills = ipow(p, static_cast<int>(free_cells.size()));
    for (std::uint64_t f = 0; f < fills; ++f) {
      std::vector<Vector> basis(dim, Vector(n, 0));
      for (int r = 0; r < dim; ++r) basis[r][pivots[r]] = 1;
      std::uint64_t rest = f;
      for (auto [r, c] : free_cells) {
        basis[r][c] = static_cast<int>(rest % p);
        rest /= p;
      }
      out.push_back(Subspace::span(ctx, basis));
    }
    // Next combination of pivot columns.
    int i = dim - 1;
    while (i >= 0 && pivots[i] == n - dim + i) --i;
    if (i < 0) break;
    ++pivots[i];
    for (int j = i + 1; j < dim; ++j) pivots[j] = pivots[j - 1] + 1;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Subspace> enumerate_all_subspaces(const GroupContext& ctx) {
  std::vector<Subspace> out;
  for (int d = 0; d <= ctx.n(); ++d) {
    auto level = enumerate_subspaces(ctx, d);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

QuotientMap::QuotientMap(const GroupContext& ctx, Subspace kernel)
    : source_(ctx),
      target_(ctx.p(), ctx.n() - kernel.dim()),
      kernel_(std::move(kernel)) {
  if (kernel_.ambient_rank() != ctx.n() || kernel_.p() != ctx.p())
    throw InputError("subspace context mismatch");
  std::vector<int> free_cols;
  for (int c = 0; c < ctx.n(); ++c)
    if (std::find(kernel_.pivots().begin(), kernel_.pivots().end(), c) ==
        kernel_.pivots().end())
      free_cols.push_back(c);
  project_.resize(ctx.order());
  lift_.assign(target_.order(), 0);
  for (Index h = 0; h < ctx.order(); ++h) {
    Vector r = kernel_.reduce(ctx.to_vector(h));
    Vector q(free_cols.size());
    for (size_t i = 0; i < free_cols.size(); ++i) q[i] = r[free_cols[i]];
    Index qi = target_.to_index(q);
    project_[h] = qi;
    if (ctx.to_index(r) == h) lift_[qi] = h;
  }
}

SubspaceEmbedding::SubspaceEmbedding(const GroupContext& ctx, Subspace sub)
    : ambient_(ctx), local_(ctx.p(), sub.dim()), sub_(std::move(sub)) {
  if (sub_.ambient_rank() != ctx.n() || sub_.p() != ctx.p())
    throw InputError("subspace context mismatch");
  embed_.resize(local_.order());
  for (Index i = 0; i < local_.order(); ++i)
    embed_[i] = ctx.to_index(sub_.combine(local_.to_vector(i)));
}

Index SubspaceEmbedding::to_local(Index h) const {
  Vector v = ambient_.to_vector(h);
  if (!sub_.contains(v)) throw InputError("element outside the subspace");
  return local_.to_index(sub_.coordinates(v));
}

// ------------------------------------------------------------------ Matrix

Matrix::Matrix(int p, int n) : p_(p), n_(n), a_(static_cast<size_t>(n) * n, 0) {}

Matrix::Matrix(int p, int n, std::vector<int> entries)
    : p_(p), n_(n), a_(std::move(entries)) {
  if (a_.size() != static_cast<size_t>(n) * n)
    throw InputError("matrix needs n*n entries");
  for (int& x : a_) x = mod(x, p);
}

Matrix Matrix::identity(int p, int n) {
  Matrix m(p, n);
  for (int i = 0; i < n; ++i) m.a_[i * n + i] = 1;
  return m;
}

void Matrix::set(int r, int c, int value) { a_[r * n_ + c] = mod(value, p_); }

Matrix Matrix::operator*(const Matrix& rhs) const {
  if (rhs.n_ != n_ || rhs.p_ != p_) throw InputError("matrix shape mismatch");
  Matrix out(p_, n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) {
      long long s = 0;
      for (int k = 0; k < n_; ++k) s += at(i, k) * rhs.at(k, j);
      out.a_[i * n_ + j] = static_cast<int>(s % p_);
    }
  return out;
}

Matrix Matrix::operator-(const Matrix& rhs) const {
  if (rhs.n_ != n_ || rhs.p_ != p_) throw InputError("matrix shape mismatch");
  Matrix out(p_, n_);
  for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = mod(a_[i] - rhs.a_[i], p_);
  return out;
}

Vector Matrix::apply(std::span<const int> row) const {
  if (static_cast<int>(row.size()) != n_) throw InputError("vector length");
  Vector out(n_, 0);
  for (int j = 0; j < n_; ++j) {
    long long s = 0;
    for (int k = 0; k < n_; ++k) s += row[k] * at(k, j);
    out[j] = static_cast<int>(s % p_);
  }
  return out;
}

int Matrix::rank() const {
  std::vector<Vector> rows;
  for (int i = 0; i < n_; ++i) rows.emplace_back(a_.begin() + i * n_, a_.begin() + (i + 1) * n_);
  return static_cast<int>(row_reduce(p_, std::move(rows)).size());
}

int Matrix::determinant() const {
  std::vector<Vector> m;
  for (int i = 0; i < n_; ++i) m.emplace_back(a_.begin() + i * n_, a_.begin() + (i + 1) * n_);
  long long det = 1;
  for (int c = 0; c < n_; ++c) {
    int piv = c;
    while (piv < n_ && m[piv][c] == 0) ++piv;
    if (piv == n_) return 0;
    if (piv != c) {
      std::swap(m[piv], m[c]);
      det = mod(-det, p_);
    }
    det = det * m[c][c] % p_;
    int inv = inv_mod(m[c][c], p_);
    for (int r = c + 1; r < n_; ++r) {
      int f = m[r][c] * inv % p_;
      for (int k = c; k < n_; ++k) m[r][k] = mod(m[r][k] - f * m[c][k], p_);
    }
  }
  return static_cast<int>(det);
}

std::optional<Matrix> Matrix::inverse() const {
  std::vector<Vector> rows;
  for (int i = 0; i < n_; ++i) {
    Vector r(a_.begin() + i * n_, a_.begin() + (i + 1) * n_);
    r.resize(2 * n_, 0);
    r[n_ + i] = 1;
    rows.push_back(std::move(r));
  }
  auto red = row_reduce(p_, std::move(rows));
  if (static_cast<int>(red.size()) < n_ || lowest_nonzero(red[n_ - 1]) >= n_)
    return std::nullopt;
  Matrix inv(p_, n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) inv.a_[i * n_ + j] = red[i][n_ + j];
  return inv;
}

AutMatrix::AutMatrix(Matrix m) : m_(std::move(m)) {
  if (m_.determinant() == 0) throw InputError("matrix is singular");
}

AutMatrix AutMatrix::inverse() const { return AutMatrix(*m_.inverse(), Trusted{}); }

Index AutMatrix::apply_index(const GroupContext& ctx, Index i) const {
  return ctx.to_index(m_.apply(ctx.to_vector(i)));
}

std::vector<AutMatrix> unitriangular_group(const GroupContext& ctx) {
  const int n = ctx.n(), p = ctx.p();
  if (n > 4) throw LimitError("unitriangular enumeration supports n <= 4");
  std::vector<std::pair<int, int>> cells;
  for (int r = 0; r < n; ++r)
    for (int c = r + 1; c < n; ++c) cells.emplace_back(r, c);
  const std::uint64_t count = ipow(p, static_cast<int>(cells.size()));
  std::vector<AutMatrix> out;
  out.reserve(count);
  for (std::uint64_t k = 0; k < count; ++k) {
    Matrix m = Matrix::identity(p, n);
    std::uint64_t rest = k;
    for (auto [r, c] : cells) {
      m.set(r, c, static_cast<int>(rest % p));
      rest /= p;
    }
    out.emplace_back(std::move(m));
  }
  return out;
}

std::uint64_t gl_order(const GroupContext& ctx) {
  std::uint64_t q = ipow(ctx.p(), ctx.n()), r = 1;
  for (int i = 0; i < ctx.n(); ++i) r *= q - ipow(ctx.p(), i);
  return r;
}

Subspace fixed_subspace(const GroupContext& ctx,
                        std::span<const AutMatrix> mats) {
  // x (M - I) = 0 for all M: solve the transposed system by row reduction.
  const int n = ctx.n(), p = ctx.p();
  std::vector<Vector> equations;  // one per (matrix, column)
  for (const auto& m : mats) {
    if (m.n() != n || m.p() != p) throw InputError("matrix context mismatch");
    Matrix d = m.matrix() - Matrix::identity(p, n);
    for (int c = 0; c < n; ++c) {
      Vector eq(n);
      for (int r = 0; r < n; ++r) eq[r] = d.at(r, c);
      equations.push_back(std::move(eq));
    }
  }
  auto red = row_reduce(p, std::move(equations));
  std::vector<int> pivot_cols;
  for (const auto& r : red) pivot_cols.push_back(lowest_nonzero(r));
  std::vector<Vector> kernel;
  for (int f = 0; f < n; ++f) {
    if (std::find(pivot_cols.begin(), pivot_cols.end(), f) != pivot_cols.end())
      continue;
    Vector v(n, 0);
    v[f] = 1;
    for (size_t i = 0; i < red.size(); ++i) v[pivot_cols[i]] = mod(-red[i][f], p);
    kernel.push_back(std::move(v));
  }
  return Subspace::span(ctx, kernel);
}

}  // namespace sring
