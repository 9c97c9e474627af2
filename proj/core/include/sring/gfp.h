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

#ifndef SRING_GFP_H_
#define SRING_GFP_H_

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "sring/common.h"

namespace sring {

// Coordinates of an element of Z_p^n, each reduced into [0, p).
using Vector = std::vector<int>;

// The ambient group H = Z_p^n together with its element/index bijection.
// Copies share the precomputed arithmetic tables.
class GroupContext {
 public:
  static constexpr int kMaxRank = 8;

  // Throws InputError unless p is an odd prime and 0 <= n <= kMaxRank.
  // Rank 0 is the trivial group, which arises as a quotient H/H.
  GroupContext(int p, int n);

  int p() const { return p_; }
  int n() const { return n_; }
  Index order() const { return order_; }

  Index to_index(std::span<const int> v) const;
  Vector to_vector(Index i) const;
  int coordinate(Index i, int k) const;

  Index add(Index a, Index b) const {
    return tables_->add.empty() ? add_slow(a, b) : tables_->add[a * order_ + b];
  }
  Index neg(Index a) const { return tables_->neg[a]; }
  Index sub(Index a, Index b) const { return add(a, neg(b)); }
  Index scale(int k, Index a) const;

  // Unit vector e_k.
  Index unit(int k) const { return pow_[k]; }

  friend bool operator==(const GroupContext& a, const GroupContext& b) {
    return a.p_ == b.p_ && a.n_ == b.n_;
  }

 private:
  struct Tables {
    std::vector<Index> add;
    std::vector<Index> neg;
  };
  Index add_slow(Index a, Index b) const;

  int p_ = 3;
  int n_ = 1;
  Index order_ = 3;
  std::vector<Index> pow_;
  std::shared_ptr<const Tables> tables_;
};

// Throws InputError if the two contexts differ.
void require_same_context(const GroupContext& a, const GroupContext& b);

bool is_prime(int p);
std::uint64_t ipow(std::uint64_t base, int exp);

// Rows of the reduced echelon form of `rows` over GF(p), zero rows dropped.
// Pivots are the lowest nonzero coordinate of each row.
std::vector<Vector> row_reduce(int p, std::vector<Vector> rows);

// A subgroup of Z_p^n held by its reduced echelon basis, so equal
// subspaces compare equal member by member.
class Subspace {
 public:
  // Span of `vectors` (rref_span).
  static Subspace span(const GroupContext& ctx, std::span<const Vector> vectors);
  static Subspace span_of_indices(const GroupContext& ctx,
                                  std::span<const Index> elements);
  static Subspace trivial(const GroupContext& ctx);
  static Subspace full(const GroupContext& ctx);

  int dim() const { return static_cast<int>(basis_.size()); }
  int ambient_rank() const { return n_; }
  int p() const { return p_; }
  Index order() const { return static_cast<Index>(ipow(p_, dim())); }
  const std::vector<Vector>& basis() const { return basis_; }
  const std::vector<int>& pivots() const { return pivots_; }

  bool contains(std::span<const int> v) const;
  bool contains_index(const GroupContext& ctx, Index i) const;
  bool contains(const Subspace& other) const;

  // Canonical representative of the coset v + this (pivot coordinates zero).
  Vector reduce(std::span<const int> v) const;

  // Sorted element indices.
  ElementSet elements(const GroupContext& ctx) const;

  // Coordinates of a member with respect to the basis (read at the pivots).
  Vector coordinates(std::span<const int> v) const;
  // Member with the given basis coordinates.
  Vector combine(std::span<const int> coords) const;

  friend bool operator==(const Subspace&, const Subspace&) = default;
  // Canonical order: by dimension, then basis rows lexicographically.
  friend std::strong_ordering operator<=>(const Subspace& a,
                                          const Subspace& b);

 private:
  Subspace(int p, int n, std::vector<Vector> basis);

  int p_ = 3;
  int n_ = 0;
  std::vector<Vector> basis_;
  std::vector<int> pivots_;
};

// Coordinates on H/K: the coordinates of H outside the pivot columns of K,
// read off the reduced coset representative in increasing order. This
// identifies H/K with the complement spanned by those unit vectors.
class QuotientMap {
 public:
  QuotientMap(const GroupContext& ctx, Subspace kernel);

  const GroupContext& source() const { return source_; }
  const GroupContext& target() const { return target_; }
  const Subspace& kernel() const { return kernel_; }

  Index project(Index h) const { return project_[h]; }
  // Representative of a coset: the member with zero pivot coordinates.
  Index lift(Index q) const { return lift_[q]; }

 private:
  GroupContext source_;
  GroupContext target_;
  Subspace kernel_;
  std::vector<Index> project_;
  std::vector<Index> lift_;
};

// Identifies a subspace K with Z_p^dim K through its reduced basis.
class SubspaceEmbedding {
 public:
  SubspaceEmbedding(const GroupContext& ctx, Subspace sub);

  const GroupContext& ambient() const { return ambient_; }
  const GroupContext& local() const { return local_; }
  const Subspace& subspace() const { return sub_; }

  Index embed(Index local_index) const { return embed_[local_index]; }
  // Throws InputError if h lies outside the subspace.
  Index to_local(Index h) const;

 private:
  GroupContext ambient_;
  GroupContext local_;
  Subspace sub_;
  std::vector<Index> embed_;
};

struct LatticeOps {
  Subspace sum;
  Subspace intersection;
  bool contains;  // B is contained in A
};

Subspace subspace_sum(const Subspace& a, const Subspace& b);
Subspace subspace_intersection(const Subspace& a, const Subspace& b);
LatticeOps subspace_lattice_ops(const Subspace& a, const Subspace& b);

// Number of dim-k subspaces of GF(p)^n.
std::uint64_t gaussian_binomial(int p, int n, int k);

// All subspaces of the given dimension in canonical order. Throws LimitError
// beyond kMaxEnumeratedSubspaces.
inline constexpr std::uint64_t kMaxEnumeratedSubspaces = 2'000'000;
std::vector<Subspace> enumerate_subspaces(const GroupContext& ctx, int dim);
// All subspaces, ordered by dimension and then canonically.
std::vector<Subspace> enumerate_all_subspaces(const GroupContext& ctx);

// Square matrix over GF(p). Vectors act as rows: x -> x * M.
class Matrix {
 public:
  Matrix(int p, int n);  // zero matrix
  Matrix(int p, int n, std::vector<int> entries);  // row-major, reduced mod p
  static Matrix identity(int p, int n);

  int p() const { return p_; }
  int n() const { return n_; }
  int at(int r, int c) const { return a_[r * n_ + c]; }
  void set(int r, int c, int value);
  const std::vector<int>& entries() const { return a_; }

  Matrix operator*(const Matrix& rhs) const;
  Matrix operator-(const Matrix& rhs) const;
  Vector apply(std::span<const int> row) const;  // row * M
  int rank() const;
  int determinant() const;
  std::optional<Matrix> inverse() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;
  friend auto operator<=>(const Matrix&, const Matrix&) = default;

 private:
  int p_;
  int n_;
  std::vector<int> a_;
};

// Invertible matrix, i.e. an automorphism of H.
class AutMatrix {
 public:
  // Throws InputError if `m` is singular.
  explicit AutMatrix(Matrix m);
  static AutMatrix identity(int p, int n) {
    return AutMatrix(Matrix::identity(p, n));
  }

  const Matrix& matrix() const { return m_; }
  int p() const { return m_.p(); }
  int n() const { return m_.n(); }
  AutMatrix operator*(const AutMatrix& rhs) const {
    return AutMatrix(m_ * rhs.m_, Trusted{});
  }
  AutMatrix inverse() const;
  Vector apply(std::span<const int> row) const { return m_.apply(row); }
  Index apply_index(const GroupContext& ctx, Index i) const;

  friend bool operator==(const AutMatrix&, const AutMatrix&) = default;
  friend auto operator<=>(const AutMatrix&, const AutMatrix&) = default;

 private:
  struct Trusted {};
  AutMatrix(Matrix m, Trusted) : m_(std::move(m)) {}
  Matrix m_;
};

// All upper unitriangular matrices, ordered by their above-diagonal entries.
// Throws LimitError for n > 4 (more than p^6 elements).
std::vector<AutMatrix> unitriangular_group(const GroupContext& ctx);

// |GL(n, p)|.
std::uint64_t gl_order(const GroupContext& ctx);

// Subspace of vectors fixed by every matrix: the intersection of the left
// kernels of M - I.
Subspace fixed_subspace(const GroupContext& ctx,
                        std::span<const AutMatrix> mats);

}  // namespace sring

#endif  // SRING_GFP_H_
