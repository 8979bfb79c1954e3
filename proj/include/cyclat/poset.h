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

// The materialized lattice CP(n) and the structural checks run on it.

#ifndef CYCLAT_POSET_H_
#define CYCLAT_POSET_H_

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "cyclat/admitted.h"
#include "cyclat/perm_core.h"

namespace cyclat {

inline constexpr int kDefaultMaxN = 9;

// The enumeration cap: CYCLAT_MAX_N if set to a positive integer, otherwise
// kDefaultMaxN. A diagram of order n holds (n-1)! nodes; at n = 9 that is
// 40320 nodes and 141120 edges; a JSON export of it peaks near 90 MB, and
// each further step multiplies that by about n.
int MaxOrder();

struct BuildOptions {
  int max_n = 0;    // 0: use MaxOrder()
  int workers = 1;  // threads expanding each rank layer
};

struct HasseEdge {
  int lower = 0;
  int upper = 0;
  DescentLabel label;

  friend bool operator==(const HasseEdge&, const HasseEdge&) = default;
  friend auto operator<=>(const HasseEdge&, const HasseEdge&) = default;
};

enum class Ordering { kLess, kGreater, kEqual, kIncomparable };
std::string_view OrderingName(Ordering o);

// Nodes are indexed in lexicographic order of canonical cycle words; edges
// are sorted by (lower, upper). Read-only after Build.
class HasseDiagram {
 public:
  int n() const { return n_; }
  int size() const { return static_cast<int>(nodes_.size()); }

  const CircularPermutation& node(int index) const { return nodes_[index]; }
  const AdmittedVector& vector(int index) const { return vectors_[index]; }
  std::int64_t rank(int index) const { return ranks_[index]; }
  std::span<const HasseEdge> edges() const { return edges_; }
  // Indices into edges().
  std::span<const int> up_edges(int index) const { return up_[index]; }
  std::span<const int> down_edges(int index) const { return down_[index]; }

  int bottom() const { return IndexOf(CircularPermutation::Bottom(n_)); }
  int top() const { return IndexOf(CircularPermutation::Top(n_)); }

  // Throws kIndexOutOfRange for elements of another order.
  int IndexOf(const CircularPermutation& sigma) const;
  int IndexOf(const AdmittedVector& v) const;

  // x <= y, decided on admitted vectors.
  bool Leq(int x, int y) const;

  std::int64_t MaxRank() const;

 private:
  friend HasseDiagram Build(int n, const BuildOptions& options);

  int n_ = 0;
  std::vector<CircularPermutation> nodes_;
  std::vector<AdmittedVector> vectors_;
  std::vector<std::int64_t> ranks_;
  std::vector<HasseEdge> edges_;
  std::vector<std::vector<int>> up_;
  std::vector<std::vector<int>> down_;
  std::unordered_map<std::uint64_t, int> index_;
};

// Breadth-first from the bottom along CoversUp, layer by layer. The result
// does not depend on `options.workers`. Throws kCapExceeded.
HasseDiagram Build(int n, const BuildOptions& options = {});

// Componentwise comparison of the admitted vectors.
Ordering Compare(const CircularPermutation& a, const CircularPermutation& b);

// Eulerian numbers a(n,k): permutations of S_n with k descents.
std::uint64_t Eulerian(int n, int k);
// Rows 0..max_n of the Eulerian triangle, row n has n+1 entries (k = 0..n).
std::vector<std::vector<std::uint64_t>> EulerianTable(int max_n);

struct DescentDistribution {
  int n = 0;                             // cycles live in S_{n+1}
  std::vector<std::uint64_t> histogram;  // by number of large descents
  std::vector<std::uint64_t> cover_histogram;  // by number of up-covers
  std::vector<std::uint64_t> eulerian_row;
  std::uint64_t edge_count = 0;
  std::uint64_t weighted_eulerian = 0;  // sum_k k a(n,k)
  bool pass = false;
};

// Compares the large-descent histogram of the (n+1)-cycles with a(n, .).
DescentDistribution VerifyDescentDistribution(int n,
                                              const BuildOptions& options = {});

// Moebius function values on closed intervals. Rows mu(x, .) are computed
// on first use and cached.
class MobiusTable {
 public:
  explicit MobiusTable(const HasseDiagram& diagram) : diagram_(&diagram) {}

  // Throws kNotComparable unless x <= y.
  int Mobius(int x, int y);
  // mu(x, y) for every y (std::nullopt where x is not below y).
  const std::vector<std::optional<int>>& Row(int x);

 private:
  const HasseDiagram* diagram_;
  std::map<int, std::vector<std::optional<int>>> rows_;
};

// Join and meet of every pair of nodes, indexed [x * size + y].
struct LatticeTables {
  int size = 0;
  std::vector<int> join;
  std::vector<int> meet;

  int Join(int x, int y) const { return join[x * size + y]; }
  int Meet(int x, int y) const { return meet[x * size + y]; }
};

LatticeTables ComputeLatticeTables(const HasseDiagram& diagram);

struct LatticeWitness {
  std::vector<int> nodes;  // indices into the diagram
  std::string description;
};

struct LatticeProperty {
  bool holds = false;
  std::optional<LatticeWitness> counterexample;
};

// x v y = x v z implies x v y = x v (y ^ z), and the dual.
LatticeProperty CheckSemidistributive(const HasseDiagram& diagram,
                                      const LatticeTables& tables);
// rank(x) + rank(y) = rank(x ^ y) + rank(x v y) for all pairs. A
// counterexample lists x, y, x ^ y, x v y, choosing the shortest [x ^ y, x v y].
LatticeProperty CheckModular(const HasseDiagram& diagram,
                             const LatticeTables& tables);
// x ^ (y v z) = (x ^ y) v (x ^ z) for all triples.
LatticeProperty CheckDistributive(const HasseDiagram& diagram,
                                  const LatticeTables& tables);

// A finite ranked poset given by its cover relation; used for truncations.
struct RankedPoset {
  std::vector<std::string> labels;
  std::vector<std::int64_t> ranks;
  std::vector<std::pair<int, int>> covers;  // (lower, upper)

  int size() const { return static_cast<int>(labels.size()); }
  std::vector<int> RankSizes() const;
};

// Nodes of rank <= k with the covers among them.
RankedPoset Truncate(const HasseDiagram& diagram, std::int64_t k);

// A partition stored weakly decreasing.
class Partition {
 public:
  Partition() = default;
  // Sorts and drops zero parts; throws kIndexOutOfRange on negative parts.
  explicit Partition(std::vector<int> parts);

  int weight() const;
  std::span<const int> parts() const { return parts_; }
  int part(int index) const {
    return index < static_cast<int>(parts_.size()) ? parts_[index] : 0;
  }
  std::string ToString() const;  // "(2,1)"; empty partition "()"

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

// Containment of Young diagrams.
bool YoungLeq(const Partition& a, const Partition& b);
// All partitions of weight <= k ordered by weight, then decreasingly.
std::vector<Partition> PartitionsUpTo(int k);
// Young's lattice restricted to weight <= k.
RankedPoset YoungTruncation(int k);

// The shuffle of (m+1 ... n) and (1 ... m), m = floor(n/2), in which exactly
// lambda_i of the large letters lie to the right of the small letter i.
// Requires lambda to fit in an m x (n-m) box.
CircularPermutation ShuffleOfPartition(int n, const Partition& lambda);

struct YoungComparison {
  int n = 0;
  int k = 0;
  bool isomorphic = false;
  std::vector<int> cp_rank_sizes;
  std::vector<int> young_rank_sizes;
  std::string detail;
};

// Checks that partition -> shuffle is a poset isomorphism from Young's
// lattice at weight <= k onto the rank <= k part of CP(n).
YoungComparison CompareWithYoung(const HasseDiagram& diagram, int k);

// alpha = (r_p s_p) o ... o (r_1 s_1) for the labels of an upward chain
// starting at `from`. Throws kNotAChain if a label is not a large circular
// descent of the current element.
struct PathConjugator {
  PermWord alpha;
  CircularPermutation target;
};

PathConjugator ComputePathConjugator(const CircularPermutation& from,
                                     std::span<const DescentLabel> chain);

// A uniformly random upward cover path from `from` to `to` (requires
// from <= to), chosen one step at a time among covers staying below `to`.
std::vector<DescentLabel> RandomChain(const HasseDiagram& diagram, int from,
                                      int to, std::mt19937_64& rng);

// Edge-reversing graph automorphism check for a map on the nodes.
bool IsAntiAutomorphism(const HasseDiagram& diagram,
                        const std::vector<int>& image);

// Shortest and longest bottom-to-top chain lengths.
std::pair<std::int64_t, std::int64_t> ChainLengthRange(
    const HasseDiagram& diagram);

}  // namespace cyclat

#endif  // CYCLAT_POSET_H_
