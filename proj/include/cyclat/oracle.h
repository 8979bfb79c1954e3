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

// Brute-force reference computations. Nothing here calls into the admitted
// or affine modules; they exist to cross-check those formulas.

#ifndef CYCLAT_ORACLE_H_
#define CYCLAT_ORACLE_H_

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "cyclat/poset.h"

namespace cyclat::oracle {

// Reflexive-transitive closure of the cover edges of a diagram.
class ClosureOrder {
 public:
  explicit ClosureOrder(const HasseDiagram& diagram);

  int size() const { return size_; }
  bool Leq(int x, int y) const { return reach_[x][y]; }
  std::int64_t ComparablePairs() const;

 private:
  int size_;
  std::vector<std::vector<bool>> reach_;
};

ClosureOrder OrderByClosure(const HasseDiagram& diagram);

// Least common upper bound / greatest common lower bound by exhaustive
// search. Throws kNotALattice if it is not unique.
int JoinBySearch(const ClosureOrder& order, int x, int y);
int MeetBySearch(const ClosureOrder& order, int x, int y);

// Histogram of large circular descents over the n! cycles of S_{n+1},
// scanning plain integer words.
std::vector<std::uint64_t> DescentsByScan(int n);

// Eulerian numbers counted as descents of all permutations of S_n.
std::vector<std::uint64_t> EulerianByScan(int n);

// Counts pairs (i, j), 1 <= i <= n < ... , i < j, f(i) > f(j) one by one
// for j up to i + n * (spread / n + 2).
std::int64_t AffineLengthByEnumeration(const std::vector<std::int64_t>& window);

// Minimal number of generators s_0..s_{n-1} whose product is the window,
// by breadth-first search from the identity. std::nullopt beyond max_depth.
std::optional<int> AffineLengthByBfs(const std::vector<std::int64_t>& window,
                                     int max_depth);

// Every vector with 0 <= v_ij <= j - i - 1 satisfying the defining
// inequalities, as rows. Only practical for n <= 7.
std::vector<std::vector<std::vector<int>>> AdmittedVectorsByBruteForce(int n);

}  // namespace cyclat::oracle

#endif  // CYCLAT_ORACLE_H_
