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

#include "cyclat/poset.h"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <set>
#include <thread>
#include <tuple>
#include <unordered_set>

#include "cyclat/error.h"

namespace cyclat {

int MaxOrder() {
  if (const char* env = std::getenv("CYCLAT_MAX_N")) {
    char* end = nullptr;
    const long value = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && value > 0 && value <= 16) {
      return static_cast<int>(value);
    }
  }
  return kDefaultMaxN;
}

std::string_view OrderingName(Ordering o) {
  switch (o) {
    case Ordering::kLess: return "LT";
    case Ordering::kGreater: return "GT";
    case Ordering::kEqual: return "EQ";
    case Ordering::kIncomparable: return "INCOMPARABLE";
  }
  return "?";
}

int HasseDiagram::IndexOf(const CircularPermutation& sigma) const {
  if (sigma.n() != n_) {
    throw Error(ErrorCode::kIndexOutOfRange,
                sigma.ToString() + " is not of order " + std::to_string(n_));
  }
  return index_.at(sigma.Key());
}

int HasseDiagram::IndexOf(const AdmittedVector& v) const {
  return IndexOf(ToCycle(v));
}

bool HasseDiagram::Leq(int x, int y) const {
  return cyclat::Leq(vectors_[x], vectors_[y]);
}

std::int64_t HasseDiagram::MaxRank() const {
  return ranks_.empty() ? 0 : *std::max_element(ranks_.begin(), ranks_.end());
}

namespace {

struct Expansion {
  CircularPermutation source;
  std::vector<Cover> covers;
};

std::vector<Expansion> ExpandLayer(const std::vector<CircularPermutation>& layer,
                                   int workers) {
  std::vector<Expansion> out;
  out.reserve(layer.size());
  for (const auto& sigma : layer) out.push_back({sigma, {}});
  workers = std::clamp(workers, 1, 64);
  if (workers == 1 || layer.size() < 64) {
    for (auto& e : out) e.covers = CoversUp(e.source);
    return out;
  }
  std::vector<std::thread> threads;
  const std::size_t chunk = (layer.size() + workers - 1) / workers;
  for (int w = 0; w < workers; ++w) {
    const std::size_t begin = w * chunk;
    const std::size_t end = std::min(layer.size(), begin + chunk);
    if (begin >= end) break;
    threads.emplace_back([&out, begin, end] {
      for (std::size_t x = begin; x < end; ++x) {
        out[x].covers = CoversUp(out[x].source);
      }
    });
  }
  for (auto& t : threads) t.join();
  return out;
}

}  // namespace

HasseDiagram Build(int n, const BuildOptions& options) {
  const int cap = std::min(options.max_n > 0 ? options.max_n : MaxOrder(), 16);
  if (n < 1 || n > cap) {
    throw Error(ErrorCode::kCapExceeded,
                "order " + std::to_string(n) + " outside 1.." +
                    std::to_string(cap) + " (set CYCLAT_MAX_N to raise)");
  }
  struct RawEdge {
    std::uint64_t lower;
    std::uint64_t upper;
    DescentLabel label;
  };
  std::vector<CircularPermutation> all;
  std::vector<RawEdge> raw_edges;
  std::unordered_set<std::uint64_t> seen;

  std::vector<CircularPermutation> layer{CircularPermutation::Bottom(n)};
  seen.insert(layer.front().Key());
  while (!layer.empty()) {
    const auto expanded = ExpandLayer(layer, options.workers);
    std::vector<CircularPermutation> next;
    for (const auto& e : expanded) {
      all.push_back(e.source);
      for (const auto& cover : e.covers) {
        raw_edges.push_back({e.source.Key(), cover.target.Key(), cover.label});
        if (seen.insert(cover.target.Key()).second) next.push_back(cover.target);
      }
    }
    layer = std::move(next);
  }

  HasseDiagram d;
  d.n_ = n;
  std::sort(all.begin(), all.end());
  d.nodes_ = std::move(all);
  d.index_.reserve(d.nodes_.size());
  for (int x = 0; x < static_cast<int>(d.nodes_.size()); ++x) {
    d.index_.emplace(d.nodes_[x].Key(), x);
    d.vectors_.push_back(ToVector(d.nodes_[x]));
    d.ranks_.push_back(RankN(d.nodes_[x]));
  }
  for (const auto& e : raw_edges) {
    d.edges_.push_back({d.index_.at(e.lower), d.index_.at(e.upper), e.label});
  }
  std::sort(d.edges_.begin(), d.edges_.end());
  d.up_.assign(d.nodes_.size(), {});
  d.down_.assign(d.nodes_.size(), {});
  for (int x = 0; x < static_cast<int>(d.edges_.size()); ++x) {
    d.up_[d.edges_[x].lower].push_back(x);
    d.down_[d.edges_[x].upper].push_back(x);
  }
  return d;
}

Ordering Compare(const CircularPermutation& a, const CircularPermutation& b) {
  if (a.n() != b.n()) {
    throw Error(ErrorCode::kShapeMismatch, "compare: orders differ");
  }
  const auto u = ToVector(a);
  const auto v = ToVector(b);
  if (u == v) return Ordering::kEqual;
  if (Leq(u, v)) return Ordering::kLess;
  if (Leq(v, u)) return Ordering::kGreater;
  return Ordering::kIncomparable;
}

std::vector<std::vector<std::uint64_t>> EulerianTable(int max_n) {
  if (max_n < 0 || max_n > 20) {
    throw Error(ErrorCode::kIndexOutOfRange, "Eulerian rows limited to 0..20");
  }
  std::vector<std::vector<std::uint64_t>> a(max_n + 1);
  a[0] = {1};
  for (int n = 1; n <= max_n; ++n) {
    a[n].assign(n + 1, 0);
    a[n][0] = 1;
    for (int k = 1; k <= n; ++k) {
      const std::uint64_t same = k < n ? a[n - 1][k] : 0;
      a[n][k] = (k + 1) * same + (n - k) * a[n - 1][k - 1];
    }
  }
  return a;
}

std::uint64_t Eulerian(int n, int k) {
  if (n < 0 || k < 0 || k > n) return 0;
  return EulerianTable(n)[n][k];
}

DescentDistribution VerifyDescentDistribution(int n,
                                              const BuildOptions& options) {
  DescentDistribution out;
  out.n = n;
  const auto diagram = Build(n + 1, options);
  out.eulerian_row = EulerianTable(n)[n];
  out.histogram.assign(n + 1, 0);
  out.cover_histogram.assign(n + 1, 0);
  bool in_range = true;
  for (int x = 0; x < diagram.size(); ++x) {
    const auto d = LargeCircularDescents(diagram.node(x)).size();
    const auto c = diagram.up_edges(x).size();
    if (d > static_cast<std::size_t>(n) || c > static_cast<std::size_t>(n)) {
      in_range = false;
      continue;
    }
    ++out.histogram[d];
    ++out.cover_histogram[c];
  }
  out.edge_count = diagram.edges().size();
  for (int k = 0; k <= n; ++k) out.weighted_eulerian += k * out.eulerian_row[k];
  out.pass = in_range && out.histogram == out.eulerian_row &&
             out.cover_histogram == out.eulerian_row &&
             out.edge_count == out.weighted_eulerian;
  return out;
}

const std::vector<std::optional<int>>& MobiusTable::Row(int x) {
  if (auto it = rows_.find(x); it != rows_.end()) return it->second;
  const auto& d = *diagram_;
  std::vector<int> above;
  for (int z = 0; z < d.size(); ++z) {
    if (d.Leq(x, z)) above.push_back(z);
  }
  std::stable_sort(above.begin(), above.end(),
                   [&d](int a, int b) { return d.rank(a) < d.rank(b); });
  std::vector<std::optional<int>> row(d.size());
  for (std::size_t p = 0; p < above.size(); ++p) {
    const int z = above[p];
    if (z == x) {
      row[z] = 1;
      continue;
    }
    int sum = 0;
    for (std::size_t q = 0; q < p; ++q) {
      const int w = above[q];
      if (d.rank(w) < d.rank(z) && d.Leq(w, z)) sum += *row[w];
    }
    row[z] = -sum;
  }
  return rows_.emplace(x, std::move(row)).first->second;
}

int MobiusTable::Mobius(int x, int y) {
  const auto& row = Row(x);
  if (!row[y]) {
    throw Error(ErrorCode::kNotComparable,
                diagram_->node(x).ToString() + " is not below " +
                    diagram_->node(y).ToString());
  }
  return *row[y];
}

LatticeTables ComputeLatticeTables(const HasseDiagram& diagram) {
  LatticeTables t;
  t.size = diagram.size();
  const std::size_t cells = static_cast<std::size_t>(t.size) * t.size;
  t.join.assign(cells, -1);
  t.meet.assign(cells, -1);
  for (int x = 0; x < t.size; ++x) {
    for (int y = x; y < t.size; ++y) {
      const int j = diagram.IndexOf(Join(diagram.vector(x), diagram.vector(y)));
      const int m = diagram.IndexOf(Meet(diagram.vector(x), diagram.vector(y)));
      t.join[x * t.size + y] = t.join[y * t.size + x] = j;
      t.meet[x * t.size + y] = t.meet[y * t.size + x] = m;
    }
  }
  return t;
}

namespace {

std::string NodeList(const HasseDiagram& d, const std::vector<int>& nodes) {
  std::string out;
  for (std::size_t x = 0; x < nodes.size(); ++x) {
    if (x > 0) out += ", ";
    out += d.node(nodes[x]).ToString();
  }
  return out;
}

}  // namespace

LatticeProperty CheckSemidistributive(const HasseDiagram& diagram,
                                      const LatticeTables& t) {
  const int size = diagram.size();
  for (int x = 0; x < size; ++x) {
    for (int y = 0; y < size; ++y) {
      for (int z = 0; z < size; ++z) {
        const int xy = t.Join(x, y);
        if (xy == t.Join(x, z) && xy != t.Join(x, t.Meet(y, z))) {
          std::vector<int> nodes{x, y, z};
          return {false, LatticeWitness{nodes, "SD-join fails at " +
                                                   NodeList(diagram, nodes)}};
        }
        const int mxy = t.Meet(x, y);
        if (mxy == t.Meet(x, z) && mxy != t.Meet(x, t.Join(y, z))) {
          std::vector<int> nodes{x, y, z};
          return {false, LatticeWitness{nodes, "SD-meet fails at " +
                                                   NodeList(diagram, nodes)}};
        }
      }
    }
  }
  return {true, std::nullopt};
}

LatticeProperty CheckModular(const HasseDiagram& diagram,
                             const LatticeTables& t) {
  // Reports the violation with the shortest interval [meet, join], ties
  // going to the lower pair.
  const int size = diagram.size();
  std::optional<std::tuple<std::int64_t, std::int64_t, int, int>> best;
  for (int x = 0; x < size; ++x) {
    for (int y = x + 1; y < size; ++y) {
      const int m = t.Meet(x, y);
      const int j = t.Join(x, y);
      if (diagram.rank(x) + diagram.rank(y) ==
          diagram.rank(m) + diagram.rank(j)) {
        continue;
      }
      const std::tuple<std::int64_t, std::int64_t, int, int> key{
          diagram.rank(j) - diagram.rank(m), diagram.rank(x) + diagram.rank(y),
          x, y};
      if (!best || key < *best) best = key;
    }
  }
  if (!best) return {true, std::nullopt};
  const auto [gap, sum, x, y] = *best;
  const int m = t.Meet(x, y);
  const int j = t.Join(x, y);
  std::vector<int> nodes{x, y, m, j};
  return {false,
          LatticeWitness{nodes, "ranks " + std::to_string(diagram.rank(x)) +
                                    "+" + std::to_string(diagram.rank(y)) +
                                    " != " + std::to_string(diagram.rank(m)) +
                                    "+" + std::to_string(diagram.rank(j)) +
                                    " for " + NodeList(diagram, nodes)}};
}

LatticeProperty CheckDistributive(const HasseDiagram& diagram,
                                  const LatticeTables& t) {
  const int size = diagram.size();
  for (int x = 0; x < size; ++x) {
    for (int y = 0; y < size; ++y) {
      for (int z = 0; z < size; ++z) {
        if (t.Meet(x, t.Join(y, z)) != t.Join(t.Meet(x, y), t.Meet(x, z))) {
          std::vector<int> nodes{x, y, z};
          return {false,
                  LatticeWitness{nodes, "x ^ (y v z) != (x ^ y) v (x ^ z) for " +
                                            NodeList(diagram, nodes)}};
        }
      }
    }
  }
  return {true, std::nullopt};
}

std::vector<int> RankedPoset::RankSizes() const {
  std::vector<int> sizes;
  for (auto r : ranks) {
    if (r >= static_cast<std::int64_t>(sizes.size())) sizes.resize(r + 1, 0);
    ++sizes[r];
  }
  return sizes;
}

RankedPoset Truncate(const HasseDiagram& diagram, std::int64_t k) {
  RankedPoset out;
  std::vector<int> local(diagram.size(), -1);
  for (int x = 0; x < diagram.size(); ++x) {
    if (diagram.rank(x) <= k) {
      local[x] = out.size();
      out.labels.push_back(diagram.node(x).ToString());
      out.ranks.push_back(diagram.rank(x));
    }
  }
  for (const auto& e : diagram.edges()) {
    if (local[e.lower] >= 0 && local[e.upper] >= 0) {
      out.covers.emplace_back(local[e.lower], local[e.upper]);
    }
  }
  return out;
}

Partition::Partition(std::vector<int> parts) {
  for (int p : parts) {
    if (p < 0) throw Error(ErrorCode::kIndexOutOfRange, "negative part");
    if (p > 0) parts_.push_back(p);
  }
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

int Partition::weight() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::string Partition::ToString() const {
  std::string out = "(";
  for (std::size_t x = 0; x < parts_.size(); ++x) {
    if (x > 0) out += ',';
    out += std::to_string(parts_[x]);
  }
  return out + ")";
}

bool YoungLeq(const Partition& a, const Partition& b) {
  for (std::size_t x = 0; x < a.parts().size(); ++x) {
    if (a.part(static_cast<int>(x)) > b.part(static_cast<int>(x))) return false;
  }
  return true;
}

namespace {

void GeneratePartitions(int remaining, int max_part, std::vector<int>& prefix,
                        std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    prefix.push_back(p);
    GeneratePartitions(remaining - p, p, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> PartitionsUpTo(int k) {
  std::vector<Partition> out;
  std::vector<int> prefix;
  for (int w = 0; w <= k; ++w) GeneratePartitions(w, w, prefix, out);
  return out;
}

RankedPoset YoungTruncation(int k) {
  RankedPoset out;
  const auto partitions = PartitionsUpTo(k);
  for (const auto& p : partitions) {
    out.labels.push_back(p.ToString());
    out.ranks.push_back(p.weight());
  }
  for (int x = 0; x < out.size(); ++x) {
    for (int y = 0; y < out.size(); ++y) {
      if (out.ranks[y] == out.ranks[x] + 1 &&
          YoungLeq(partitions[x], partitions[y])) {
        out.covers.emplace_back(x, y);
      }
    }
  }
  return out;
}

CircularPermutation ShuffleOfPartition(int n, const Partition& lambda) {
  const int small = n / 2;
  const int large = n - small;
  if (static_cast<int>(lambda.parts().size()) > small ||
      lambda.part(0) > large) {
    throw Error(ErrorCode::kIndexOutOfRange,
                "partition " + lambda.ToString() + " does not fit a " +
                    std::to_string(small) + "x" + std::to_string(large) +
                    " box");
  }
  std::vector<int> word;
  int emitted = 0;
  for (int i = 1; i <= small; ++i) {
    while (emitted < large - lambda.part(i - 1)) {
      word.push_back(small + 1 + emitted++);
    }
    word.push_back(i);
  }
  while (emitted < large) word.push_back(small + 1 + emitted++);
  return CircularPermutation::FromLetters(std::move(word));
}

YoungComparison CompareWithYoung(const HasseDiagram& diagram, int k) {
  YoungComparison out;
  out.n = diagram.n();
  out.k = k;
  out.cp_rank_sizes = Truncate(diagram, k).RankSizes();
  out.young_rank_sizes = YoungTruncation(k).RankSizes();
  if (out.cp_rank_sizes != out.young_rank_sizes) {
    out.detail = "rank sizes differ";
    return out;
  }
  const auto partitions = PartitionsUpTo(k);
  std::vector<int> image;
  std::set<int> distinct;
  for (const auto& lambda : partitions) {
    int node = -1;
    try {
      node = diagram.IndexOf(ShuffleOfPartition(diagram.n(), lambda));
    } catch (const Error&) {
      out.detail = "partition " + lambda.ToString() + " has no shuffle";
      return out;
    }
    if (diagram.rank(node) != lambda.weight()) {
      out.detail = "rank of " + diagram.node(node).ToString() +
                   " differs from weight of " + lambda.ToString();
      return out;
    }
    image.push_back(node);
    distinct.insert(node);
  }
  if (distinct.size() != partitions.size()) {
    out.detail = "encoding not injective";
    return out;
  }
  for (std::size_t a = 0; a < partitions.size(); ++a) {
    for (std::size_t b = 0; b < partitions.size(); ++b) {
      if (YoungLeq(partitions[a], partitions[b]) !=
          diagram.Leq(image[a], image[b])) {
        out.detail = "order differs at " + partitions[a].ToString() + ", " +
                     partitions[b].ToString();
        return out;
      }
    }
  }
  out.isomorphic = true;
  out.detail = "shuffle encoding is an isomorphism";
  return out;
}

PathConjugator ComputePathConjugator(const CircularPermutation& from,
                                     std::span<const DescentLabel> chain) {
  const int n = from.n();
  CircularPermutation current = from;
  PermWord alpha = PermWord::Identity(n);
  for (std::size_t p = 0; p < chain.size(); ++p) {
    const auto& label = chain[p];
    const auto descents = LargeCircularDescents(current);
    if (!std::binary_search(descents.begin(), descents.end(), label)) {
      throw Error(ErrorCode::kNotAChain,
                  "step " + std::to_string(p + 1) + ": " + label.ToString() +
                      " is not a large circular descent of " +
                      current.ToString());
    }
    current = SwapLetters(current, label.r, label.s);
    std::vector<int> t(n);
    std::iota(t.begin(), t.end(), 1);
    std::swap(t[label.r - 1], t[label.s - 1]);
    alpha = PermWord(std::move(t)).Compose(alpha);
  }
  return {alpha, current};
}

std::vector<DescentLabel> RandomChain(const HasseDiagram& diagram, int from,
                                      int to, std::mt19937_64& rng) {
  if (!diagram.Leq(from, to)) {
    throw Error(ErrorCode::kNotComparable,
                diagram.node(from).ToString() + " is not below " +
                    diagram.node(to).ToString());
  }
  std::vector<DescentLabel> chain;
  int current = from;
  while (current != to) {
    std::vector<int> options;
    for (int e : diagram.up_edges(current)) {
      if (diagram.Leq(diagram.edges()[e].upper, to)) options.push_back(e);
    }
    std::uniform_int_distribution<std::size_t> pick(0, options.size() - 1);
    const auto& edge = diagram.edges()[options[pick(rng)]];
    chain.push_back(edge.label);
    current = edge.upper;
  }
  return chain;
}

bool IsAntiAutomorphism(const HasseDiagram& diagram,
                        const std::vector<int>& image) {
  if (static_cast<int>(image.size()) != diagram.size()) return false;
  std::set<std::pair<int, int>> edges;
  for (const auto& e : diagram.edges()) edges.emplace(e.lower, e.upper);
  std::set<int> distinct(image.begin(), image.end());
  if (static_cast<int>(distinct.size()) != diagram.size()) return false;
  for (const auto& e : diagram.edges()) {
    if (!edges.count({image[e.upper], image[e.lower]})) return false;
  }
  return true;
}

std::pair<std::int64_t, std::int64_t> ChainLengthRange(
    const HasseDiagram& diagram) {
  std::vector<int> order(diagram.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return diagram.rank(a) < diagram.rank(b);
  });
  constexpr std::int64_t kUnset = -1;
  std::vector<std::int64_t> shortest(diagram.size(), kUnset);
  std::vector<std::int64_t> longest(diagram.size(), kUnset);
  shortest[diagram.bottom()] = longest[diagram.bottom()] = 0;
  for (int x : order) {
    if (shortest[x] == kUnset) continue;
    for (int e : diagram.up_edges(x)) {
      const int y = diagram.edges()[e].upper;
      if (shortest[y] == kUnset || shortest[x] + 1 < shortest[y]) {
        shortest[y] = shortest[x] + 1;
      }
      longest[y] = std::max(longest[y], longest[x] + 1);
    }
  }
  return {shortest[diagram.top()], longest[diagram.top()]};
}

}  // namespace cyclat
