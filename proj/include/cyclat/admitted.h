// Copyright 2026 The cyclat Authors
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

// Admitted vectors: natural-number vectors v indexed by pairs i < j with
// v_{i,i+1} = 0 and v_ij + v_jk <= v_ik <= v_ij + v_jk + 1 for i < j < k.
// They form a lattice isomorphic to CP(n) under the componentwise order.

#ifndef CYCLAT_ADMITTED_H_
#define CYCLAT_ADMITTED_H_

#include <array>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "cyclat/error.h"
#include "cyclat/perm_core.h"

namespace cyclat {

// Dense upper-triangular integer array indexed by 1 <= i < j <= n, stored
// row-major over i. Entries (i,i+1) are stored explicitly.
class TriangularVector {
 public:
  explicit TriangularVector(int n);

  // Row i (1-based) lists entries (i,i+1),...,(i,n); there are n-1 rows.
  static TriangularVector FromRows(int n,
                                   const std::vector<std::vector<int>>& rows);

  int n() const { return n_; }
  int at(int i, int j) const { return data_[Index(i, j)]; }
  int& at(int i, int j) { return data_[Index(i, j)]; }

  std::vector<std::vector<int>> Rows() const;
  std::int64_t Sum() const;
  std::string ToString() const;  // "[[0,1,2],[0,1],[0]]"

  friend bool operator==(const TriangularVector&,
                         const TriangularVector&) = default;
  friend auto operator<=>(const TriangularVector&,
                          const TriangularVector&) = default;

 private:
  std::size_t Index(int i, int j) const;

  int n_;
  std::vector<int> data_;
};

// First violated constraint found when validating a raw vector.
struct AdmissionViolation {
  ErrorCode code;  // kAdjacentNonzero or kDeltaOutOfRange
  int i = 0;
  int j = 0;
  int k = 0;  // unused for kAdjacentNonzero

  std::string Describe() const;
};

std::optional<AdmissionViolation> FindViolation(const TriangularVector& raw);

class AdmittedVector {
 public:
  // Throws kAdjacentNonzero / kDeltaOutOfRange naming the first violation.
  static AdmittedVector Validate(TriangularVector raw);
  static std::optional<AdmittedVector> TryValidate(TriangularVector raw);

  static AdmittedVector Zero(int n);
  static AdmittedVector Max(int n);  // v_ij = j - i - 1

  int n() const { return v_.n(); }
  // v_ij for i < j; v_ii = 0.
  int at(int i, int j) const { return i == j ? 0 : v_.at(i, j); }
  const TriangularVector& raw() const { return v_; }

  // Sum of components: the rank in the lattice.
  std::int64_t Rank() const { return v_.Sum(); }
  std::string ToString() const { return v_.ToString(); }

  friend bool operator==(const AdmittedVector&,
                         const AdmittedVector&) = default;
  friend auto operator<=>(const AdmittedVector&,
                          const AdmittedVector&) = default;

 private:
  explicit AdmittedVector(TriangularVector v) : v_(std::move(v)) {}
  friend AdmittedVector Join(const AdmittedVector&, const AdmittedVector&);
  friend AdmittedVector Meet(const AdmittedVector&, const AdmittedVector&);
  friend AdmittedVector AntiInv(const AdmittedVector&);
  friend AdmittedVector AntiConj(const AdmittedVector&);
  friend AdmittedVector Mirror(const AdmittedVector&);
  friend AdmittedVector Incremented(const AdmittedVector&, int, int);
  friend AdmittedVector Decremented(const AdmittedVector&, int, int);

  TriangularVector v_;
};

// Componentwise order.
bool Leq(const AdmittedVector& u, const AdmittedVector& v);

// delta_ijk(v) = v_ik - v_ij - v_jk for 1 <= i <= j <= k <= n.
int Delta(const AdmittedVector& v, int i, int j, int k);

// v + e_ij is admitted. Decided by the local delta pattern around (i,j).
bool CanIncrement(const AdmittedVector& v, int i, int j);
// v - e_ij is admitted.
bool CanDecrement(const AdmittedVector& v, int i, int j);
// Throw kDeltaOutOfRange when the move leaves the admitted set.
AdmittedVector Incremented(const AdmittedVector& v, int i, int j);
AdmittedVector Decremented(const AdmittedVector& v, int i, int j);

// v_ij = -gamma_ij(w) + sum_{i<=k<j} gamma_{k,k+1}(w) for any word w.
AdmittedVector VectorOfWord(const PermWord& w);
// The isomorphism V from CP(n) onto admitted vectors.
AdmittedVector ToVector(const CircularPermutation& sigma);
// V^{-1}, via gamma_ij(1w') = delta_1ij(v).
CircularPermutation ToCycle(const AdmittedVector& v);

// Pairs (i,j), i < j, meaning "j appears before i".
using InversionSet = std::set<std::pair<int, int>>;

// The unique word whose inversion-by-value set is `inversions`.
// Throws kNotAnInversionSet if the set is not transitive or its complement
// is not transitive.
PermWord WordFromInversionSet(int n, const InversionSet& inversions);

AdmittedVector Join(const AdmittedVector& u, const AdmittedVector& v);
AdmittedVector Meet(const AdmittedVector& u, const AdmittedVector& v);

// Image of sigma -> sigma^{-1}: v_ij = j - i - 1 - u_ij.
AdmittedVector AntiInv(const AdmittedVector& u);
// Image of sigma -> w0 sigma w0: v_ij = j - i - 1 - u_{n+1-j,n+1-i}.
AdmittedVector AntiConj(const AdmittedVector& u);
// The automorphism v_ij = u_{n+1-j,n+1-i}.
AdmittedVector Mirror(const AdmittedVector& u);

// Bits a_ijk for 1 <= i < j < k <= n.
class DeltaSequence {
 public:
  explicit DeltaSequence(int n);

  int n() const { return n_; }
  int at(int i, int j, int k) const { return bits_[Index(i, j, k)]; }
  void set(int i, int j, int k, bool bit) { bits_[Index(i, j, k)] = bit; }

  friend bool operator==(const DeltaSequence&, const DeltaSequence&) = default;

 private:
  std::size_t Index(int i, int j, int k) const;

  int n_;
  std::vector<std::uint8_t> bits_;
};

DeltaSequence ToDeltaSequence(const AdmittedVector& v);
// Throws kPtolemyViolation if a_ijk + a_ikl != a_ijl + a_jkl for some
// i < j < k < l. Rebuilds v with v_ij = v_{i,i+1} + v_{i+1,j} + a_{i,i+1,j}.
AdmittedVector FromDeltaSequence(const DeltaSequence& a);

using Triangle = std::array<int, 3>;  // sorted vertices

// A triangulation of the convex n-gon with vertices 1..n, checked
// combinatorially: n-2 triangles, each polygon side in exactly one of them,
// each diagonal in exactly two, diagonals pairwise non-crossing.
class Triangulation {
 public:
  // Throws kInvalidTriangulation.
  static Triangulation Make(int n, std::vector<Triangle> triangles);
  // All triangles share vertex 1.
  static Triangulation Fan(int n);

  int n() const { return n_; }
  const std::vector<Triangle>& triangles() const { return triangles_; }
  bool Contains(const Triangle& t) const;
  std::string ToString() const;  // "{123,134}"

  friend bool operator==(const Triangulation&, const Triangulation&) = default;
  friend auto operator<=>(const Triangulation&, const Triangulation&) = default;

 private:
  Triangulation(int n, std::vector<Triangle> triangles)
      : n_(n), triangles_(std::move(triangles)) {}

  int n_;
  std::vector<Triangle> triangles_;  // sorted
};

// Every triangulation of the n-gon (Catalan(n-2) of them), sorted.
std::vector<Triangulation> AllTriangulations(int n);

// Sum of delta_H(v) over the triangles H of t. Equals v_1n.
std::int64_t TriangulationSum(const AdmittedVector& v, const Triangulation& t);

// Flips the diagonal of the quadrilateral `quad` (any vertex order).
// Throws kQuadNotFlippable unless both triangles along one of its diagonals
// belong to t.
Triangulation Mutate(const Triangulation& t, std::array<int, 4> quad);

// Sorted vertex sets of the quadrilaterals formed by two adjacent triangles;
// each is a valid argument to Mutate.
std::vector<std::array<int, 4>> FlippableQuads(const Triangulation& t);

}  // namespace cyclat

#endif  // CYCLAT_ADMITTED_H_
