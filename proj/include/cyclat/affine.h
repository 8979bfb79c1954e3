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

// Affine permutations of Z in window notation and the interval [id, f_c] of
// the left weak order, which is isomorphic to the lattice of admitted vectors.

#ifndef CYCLAT_AFFINE_H_
#define CYCLAT_AFFINE_H_

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cyclat/admitted.h"
#include "cyclat/perm_core.h"

namespace cyclat {

// floor(a / b) for b > 0.
inline std::int64_t FloorDiv(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && (a < 0)) --q;
  return q;
}

// Window [f(1),...,f(n)] of an affine permutation f with f(x+n) = f(x)+n.
class AffineWindow {
 public:
  // Throws kInvalidWindow unless the entries are pairwise noncongruent mod n
  // and sum to n(n+1)/2.
  explicit AffineWindow(std::vector<std::int64_t> entries);

  static AffineWindow Identity(int n);
  // Accepts "[-2,1,4,7]".
  static AffineWindow Parse(std::string_view text);

  int n() const { return static_cast<int>(a_.size()); }
  std::int64_t operator[](int i) const { return a_[i - 1]; }  // 1-based
  std::span<const std::int64_t> entries() const { return a_; }

  // f(x) for any integer x.
  std::int64_t Apply(std::int64_t x) const;
  // (this o g)(x) = this(g(x)).
  AffineWindow Compose(const AffineWindow& g) const;
  AffineWindow Inverse() const;

  bool IsIncreasing() const;
  std::string ToString() const;  // "[-2,1,4,7]"

  friend bool operator==(const AffineWindow&, const AffineWindow&) = default;
  friend auto operator<=>(const AffineWindow&, const AffineWindow&) = default;

 private:
  std::vector<std::int64_t> a_;
};

// (i, j) with 1 <= i <= n, i < j and f(i) > f(j).
struct PositionInversion {
  int i = 0;
  std::int64_t j = 0;

  friend bool operator==(const PositionInversion&,
                         const PositionInversion&) = default;
  friend auto operator<=>(const PositionInversion&,
                          const PositionInversion&) = default;
};

// s_k f for the generator s_k (0 <= k < n) exchanging k and k+1 mod n.
AffineWindow LeftMultiplySk(int k, const AffineWindow& f);

// The inversion set, sorted. Finite for every affine permutation.
std::vector<PositionInversion> Inversions(const AffineWindow& f);
// |Inversions(f)| without materializing the set.
std::int64_t Length(const AffineWindow& f);

// For an increasing window, the inversions (i, p + kn) with p < i are
// counted by floor((a_i - a_p) / n); entry (p,i) holds that count.
// Throws kNotInInterval for windows that are not increasing.
TriangularVector InversionCounts(const AffineWindow& f);

// Left weak order: Inv(f) contained in Inv(g). Increasing windows compare
// floor((a_j - a_i)/n) pairwise; other windows compare explicit inversion
// sets, which is slower.
bool WeakLeq(const AffineWindow& f, const AffineWindow& g);

// a_i = i + sum_{p<i} v_pi - sum_{i<p} v_ip.
AffineWindow WindowOfVector(const AdmittedVector& v);
// v_ij = floor((a_j - a_i)/n); throws kNotInInterval outside [id, f_c].
AdmittedVector VectorOfWindow(const AffineWindow& f);

// Top of the interval: c_1 = -n(n-3)/2, c_{i+1} = c_i + n - 1.
AffineWindow TopWindow(int n);

bool InInterval(const AffineWindow& f);

// The cycle whose word has letter i at position f(i) mod n, residues taken
// in 1..n. Throws kNotInInterval.
CircularPermutation Project(const AffineWindow& f);

// Checks a_i = i - sum_{i<p} floor((a_p-a_i)/n) + sum_{p<i} floor((a_i-a_p)/n),
// which holds for every affine window.
bool WindowSelfCheck(const AffineWindow& f);

// s_ijk: i -> j - kn, j -> i + kn, other residues fixed; extended
// n-periodically.
struct SijkFactor {
  int i = 0;
  int j = 0;
  int k = 0;

  friend bool operator==(const SijkFactor&, const SijkFactor&) = default;
};

AffineWindow WindowOfFactor(int n, const SijkFactor& s);

// Factors for a saturated chain from the zero vector whose p-th step raises
// coordinate chain[p]; k_p counts occurrences of the label up to p.
// Throws kNotAChain if a step leaves the admitted vectors.
std::vector<SijkFactor> FactorizeAlongChain(
    int n, std::span<const DescentLabel> chain);
// s_1 o s_2 o ... o s_r.
AffineWindow EvaluateFactors(int n, std::span<const SijkFactor> factors);

}  // namespace cyclat

#endif  // CYCLAT_AFFINE_H_
