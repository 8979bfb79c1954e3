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

#include "cyclat/oracle.h"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

#include "cyclat/error.h"

namespace cyclat::oracle {

ClosureOrder::ClosureOrder(const HasseDiagram& diagram)
    : size_(diagram.size()),
      reach_(diagram.size(), std::vector<bool>(diagram.size(), false)) {
  std::vector<std::vector<int>> successors(size_);
  for (const auto& e : diagram.edges()) successors[e.lower].push_back(e.upper);
  for (int start = 0; start < size_; ++start) {
    std::vector<int> stack{start};
    reach_[start][start] = true;
    while (!stack.empty()) {
      const int x = stack.back();
      stack.pop_back();
      for (int y : successors[x]) {
        if (!reach_[start][y]) {
          reach_[start][y] = true;
          stack.push_back(y);
        }
      }
    }
  }
}

std::int64_t ClosureOrder::ComparablePairs() const {
  std::int64_t count = 0;
  for (const auto& row : reach_) count += std::count(row.begin(), row.end(), true);
  return count;
}

ClosureOrder OrderByClosure(const HasseDiagram& diagram) {
  return ClosureOrder(diagram);
}

namespace {

// The least element of `candidates` under `leq`, if there is one.
template <typename Leq>
std::optional<int> Least(const std::vector<int>& candidates, Leq leq) {
  if (candidates.empty()) return std::nullopt;
  int best = candidates.front();
  for (int c : candidates) {
    if (leq(c, best)) best = c;
  }
  for (int c : candidates) {
    if (!leq(best, c)) return std::nullopt;
  }
  return best;
}

}  // namespace

int JoinBySearch(const ClosureOrder& order, int x, int y) {
  std::vector<int> upper;
  for (int z = 0; z < order.size(); ++z) {
    if (order.Leq(x, z) && order.Leq(y, z)) upper.push_back(z);
  }
  const auto least =
      Least(upper, [&](int a, int b) { return order.Leq(a, b); });
  if (!least) {
    throw Error(ErrorCode::kNotALattice, "no least upper bound");
  }
  return *least;
}

int MeetBySearch(const ClosureOrder& order, int x, int y) {
  std::vector<int> lower;
  for (int z = 0; z < order.size(); ++z) {
    if (order.Leq(z, x) && order.Leq(z, y)) lower.push_back(z);
  }
  const auto greatest =
      Least(lower, [&](int a, int b) { return order.Leq(b, a); });
  if (!greatest) {
    throw Error(ErrorCode::kNotALattice, "no greatest lower bound");
  }
  return *greatest;
}

std::vector<std::uint64_t> DescentsByScan(int n) {
  const int m = n + 1;
  std::vector<std::uint64_t> histogram(m + 1, 0);
  std::vector<int> word(m);
  std::iota(word.begin(), word.end(), 1);
  do {
    int descents = 0;
    for (int p = 0; p < m; ++p) {
      const int before = word[(p + m - 1) % m];
      if (before > word[p] + 1) ++descents;
    }
    ++histogram[descents];
  } while (std::next_permutation(word.begin() + 1, word.end()));
  histogram.resize(n + 1);
  return histogram;
}

std::vector<std::uint64_t> EulerianByScan(int n) {
  std::vector<std::uint64_t> histogram(n + 1, 0);
  std::vector<int> word(n);
  std::iota(word.begin(), word.end(), 1);
  do {
    int descents = 0;
    for (int p = 0; p + 1 < n; ++p) descents += word[p] > word[p + 1];
    ++histogram[descents];
  } while (std::next_permutation(word.begin(), word.end()));
  return histogram;
}

namespace {

std::int64_t ApplyWindow(const std::vector<std::int64_t>& a, std::int64_t x) {
  const auto n = static_cast<std::int64_t>(a.size());
  std::int64_t shift = 0;
  while (x < 1) {
    x += n;
    shift -= n;
  }
  while (x > n) {
    x -= n;
    shift += n;
  }
  return a[x - 1] + shift;
}

}  // namespace

std::int64_t AffineLengthByEnumeration(const std::vector<std::int64_t>& window) {
  const auto n = static_cast<std::int64_t>(window.size());
  const auto [lo, hi] = std::minmax_element(window.begin(), window.end());
  const std::int64_t bound = (*hi - *lo) / n + 2;
  std::int64_t count = 0;
  for (std::int64_t i = 1; i <= n; ++i) {
    for (std::int64_t j = i + 1; j <= i + n * bound; ++j) {
      if (ApplyWindow(window, i) > ApplyWindow(window, j)) ++count;
    }
  }
  return count;
}

std::optional<int> AffineLengthByBfs(const std::vector<std::int64_t>& window,
                                     int max_depth) {
  const auto n = static_cast<std::int64_t>(window.size());
  std::vector<std::int64_t> identity(n);
  std::iota(identity.begin(), identity.end(), 1);
  // The generator s_k as a map on Z: k + tn <-> k + 1 + tn.
  auto generator = [n](int k, std::int64_t x) {
    std::int64_t r = x % n;
    if (r < 0) r += n;
    if (r == k % n) return x + 1;
    if (r == (k + 1) % n) return x - 1;
    return x;
  };
  std::set<std::vector<std::int64_t>> seen{identity};
  std::deque<std::pair<std::vector<std::int64_t>, int>> queue{{identity, 0}};
  while (!queue.empty()) {
    auto [current, depth] = queue.front();
    queue.pop_front();
    if (current == window) return depth;
    if (depth == max_depth) continue;
    for (int k = 0; k < n; ++k) {
      std::vector<std::int64_t> next(n);
      for (std::int64_t i = 0; i < n; ++i) next[i] = generator(k, current[i]);
      if (seen.insert(next).second) queue.emplace_back(std::move(next), depth + 1);
    }
  }
  return std::nullopt;
}

std::vector<std::vector<std::vector<int>>> AdmittedVectorsByBruteForce(int n) {
  // value[i][j] for 1 <= i < j <= n
  std::vector<std::vector<int>> value(n + 1, std::vector<int>(n + 1, 0));
  std::vector<std::pair<int, int>> free;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 2; j <= n; ++j) free.emplace_back(i, j);
  }
  std::vector<std::vector<std::vector<int>>> out;
  while (true) {
    bool ok = true;
    for (int i = 1; i <= n && ok; ++i) {
      for (int j = i + 1; j <= n && ok; ++j) {
        for (int k = j + 1; k <= n && ok; ++k) {
          const int lower = value[i][j] + value[j][k];
          ok = lower <= value[i][k] && value[i][k] <= lower + 1;
        }
      }
    }
    if (ok) {
      std::vector<std::vector<int>> rows;
      for (int i = 1; i < n; ++i) {
        rows.emplace_back(value[i].begin() + i + 1, value[i].end());
      }
      out.push_back(std::move(rows));
    }
    // Odometer over the free coordinates.
    std::size_t p = 0;
    for (; p < free.size(); ++p) {
      auto [i, j] = free[p];
      if (value[i][j] < j - i - 1) {
        ++value[i][j];
        break;
      }
      value[i][j] = 0;
    }
    if (p == free.size()) break;
  }
  return out;
}

}  // namespace cyclat::oracle
