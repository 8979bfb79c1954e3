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

#include "cyclat/admitted.h"

#include <algorithm>
#include <map>
#include <numeric>

namespace cyclat {

namespace {

void CheckSameOrder(const AdmittedVector& u, const AdmittedVector& v) {
  if (u.n() != v.n()) {
    throw Error(ErrorCode::kShapeMismatch,
                "orders " + std::to_string(u.n()) + " and " +
                    std::to_string(v.n()) + " differ");
  }
}

void CheckPair(int n, int i, int j) {
  if (i < 1 || i >= j || j > n) {
    throw Error(ErrorCode::kIndexOutOfRange,
                "pair (" + std::to_string(i) + "," + std::to_string(j) +
                    ") outside 1 <= i < j <= " + std::to_string(n));
  }
}

}  // namespace

TriangularVector::TriangularVector(int n) : n_(n) {
  if (n < 1) throw Error(ErrorCode::kShapeMismatch, "order must be >= 1");
  data_.assign(static_cast<std::size_t>(n) * (n - 1) / 2, 0);
}

std::size_t TriangularVector::Index(int i, int j) const {
  CheckPair(n_, i, j);
  const std::size_t row_offset =
      static_cast<std::size_t>(i - 1) * n_ - static_cast<std::size_t>(i - 1) * i / 2;
  return row_offset + (j - i - 1);
}

TriangularVector TriangularVector::FromRows(
    int n, const std::vector<std::vector<int>>& rows) {
  TriangularVector out(n);
  if (static_cast<int>(rows.size()) != n - 1) {
    throw Error(ErrorCode::kShapeMismatch,
                "expected " + std::to_string(n - 1) + " rows, got " +
                    std::to_string(rows.size()));
  }
  for (int i = 1; i < n; ++i) {
    const auto& row = rows[i - 1];
    if (static_cast<int>(row.size()) != n - i) {
      throw Error(ErrorCode::kShapeMismatch,
                  "row " + std::to_string(i) + " must have " +
                      std::to_string(n - i) + " entries");
    }
    for (int j = i + 1; j <= n; ++j) out.at(i, j) = row[j - i - 1];
  }
  return out;
}

std::vector<std::vector<int>> TriangularVector::Rows() const {
  std::vector<std::vector<int>> rows;
  for (int i = 1; i < n_; ++i) {
    std::vector<int> row;
    for (int j = i + 1; j <= n_; ++j) row.push_back(at(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::int64_t TriangularVector::Sum() const {
  return std::accumulate(data_.begin(), data_.end(), std::int64_t{0});
}

std::string TriangularVector::ToString() const {
  std::string out = "[";
  const auto rows = Rows();
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (r > 0) out += ',';
    out += '[';
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      if (c > 0) out += ',';
      out += std::to_string(rows[r][c]);
    }
    out += ']';
  }
  return out + "]";
}

std::string AdmissionViolation::Describe() const {
  if (code == ErrorCode::kAdjacentNonzero) {
    return "v(" + std::to_string(i) + "," + std::to_string(j) +
           ") must be 0";
  }
  return "v(" + std::to_string(i) + "," + std::to_string(k) +
         ") - v(" + std::to_string(i) + "," + std::to_string(j) +
         ") - v(" + std::to_string(j) + "," + std::to_string(k) +
         ") not in {0,1} for triple (" + std::to_string(i) + "," +
         std::to_string(j) + "," + std::to_string(k) + ")";
}

std::optional<AdmissionViolation> FindViolation(const TriangularVector& raw) {
  const int n = raw.n();
  for (int i = 1; i < n; ++i) {
    if (raw.at(i, i + 1) != 0) {
      return AdmissionViolation{ErrorCode::kAdjacentNonzero, i, i + 1, 0};
    }
  }
  // Scan by increasing span so the reported triple is the innermost one.
  for (int gap = 2; gap < n; ++gap) {
    for (int i = 1; i + gap <= n; ++i) {
      const int k = i + gap;
      for (int j = i + 1; j < k; ++j) {
        const int d = raw.at(i, k) - raw.at(i, j) - raw.at(j, k);
        if (d != 0 && d != 1) {
          return AdmissionViolation{ErrorCode::kDeltaOutOfRange, i, j, k};
        }
      }
    }
  }
  return std::nullopt;
}

AdmittedVector AdmittedVector::Validate(TriangularVector raw) {
  if (auto violation = FindViolation(raw)) {
    throw Error(violation->code, violation->Describe());
  }
  return AdmittedVector(std::move(raw));
}

std::optional<AdmittedVector> AdmittedVector::TryValidate(TriangularVector raw) {
  if (FindViolation(raw)) return std::nullopt;
  return AdmittedVector(std::move(raw));
}

AdmittedVector AdmittedVector::Zero(int n) {
  return AdmittedVector(TriangularVector(n));
}

AdmittedVector AdmittedVector::Max(int n) {
  TriangularVector v(n);
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) v.at(i, j) = j - i - 1;
  }
  return AdmittedVector(std::move(v));
}

bool Leq(const AdmittedVector& u, const AdmittedVector& v) {
  CheckSameOrder(u, v);
  const int n = u.n();
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 2; j <= n; ++j) {
      if (u.at(i, j) > v.at(i, j)) return false;
    }
  }
  return true;
}

int Delta(const AdmittedVector& v, int i, int j, int k) {
  if (i < 1 || i > j || j > k || k > v.n()) {
    throw Error(ErrorCode::kIndexOutOfRange,
                "delta needs 1 <= i <= j <= k <= n");
  }
  return v.at(i, k) - v.at(i, j) - v.at(j, k);
}

bool CanIncrement(const AdmittedVector& v, int i, int j) {
  CheckPair(v.n(), i, j);
  if (j == i + 1) return false;
  for (int p = i + 1; p < j; ++p) {
    if (Delta(v, i, p, j) != 0) return false;
  }
  for (int p = 1; p < i; ++p) {
    if (Delta(v, p, i, j) != 1) return false;
  }
  for (int p = j + 1; p <= v.n(); ++p) {
    if (Delta(v, i, j, p) != 1) return false;
  }
  return true;
}

bool CanDecrement(const AdmittedVector& v, int i, int j) {
  CheckPair(v.n(), i, j);
  if (j == i + 1) return false;
  for (int p = i + 1; p < j; ++p) {
    if (Delta(v, i, p, j) != 1) return false;
  }
  for (int p = 1; p < i; ++p) {
    if (Delta(v, p, i, j) != 0) return false;
  }
  for (int p = j + 1; p <= v.n(); ++p) {
    if (Delta(v, i, j, p) != 0) return false;
  }
  return true;
}

AdmittedVector Incremented(const AdmittedVector& v, int i, int j) {
  if (!CanIncrement(v, i, j)) {
    throw Error(ErrorCode::kDeltaOutOfRange,
                "v + e(" + std::to_string(i) + "," + std::to_string(j) +
                    ") is not admitted");
  }
  TriangularVector raw = v.raw();
  ++raw.at(i, j);
  return AdmittedVector(std::move(raw));
}

AdmittedVector Decremented(const AdmittedVector& v, int i, int j) {
  if (!CanDecrement(v, i, j)) {
    throw Error(ErrorCode::kDeltaOutOfRange,
                "v - e(" + std::to_string(i) + "," + std::to_string(j) +
                    ") is not admitted");
  }
  TriangularVector raw = v.raw();
  --raw.at(i, j);
  return AdmittedVector(std::move(raw));
}

AdmittedVector VectorOfWord(const PermWord& w) {
  const int n = w.size();
  const auto pos = w.Positions();
  auto gamma = [&](int i, int j) { return pos[j] < pos[i] ? 1 : 0; };
  TriangularVector v(n);
  for (int i = 1; i <= n; ++i) {
    int adjacent = 0;  // sum of gamma_{k,k+1} for i <= k < j
    for (int j = i + 1; j <= n; ++j) {
      adjacent += gamma(j - 1, j);
      v.at(i, j) = adjacent - gamma(i, j);
    }
  }
  return AdmittedVector::Validate(std::move(v));
}

AdmittedVector ToVector(const CircularPermutation& sigma) {
  return VectorOfWord(sigma.canon());
}

PermWord WordFromInversionSet(int n, const InversionSet& inversions) {
  std::vector<std::vector<bool>> in(n + 1, std::vector<bool>(n + 1, false));
  for (const auto& [i, j] : inversions) {
    if (i < 1 || i >= j || j > n) {
      throw Error(ErrorCode::kNotAnInversionSet,
                  "pair (" + std::to_string(i) + "," + std::to_string(j) +
                      ") out of range");
    }
    in[i][j] = true;
  }
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      for (int k = j + 1; k <= n; ++k) {
        if (in[i][j] && in[j][k] && !in[i][k]) {
          throw Error(ErrorCode::kNotAnInversionSet,
                      "not transitive at (" + std::to_string(i) + "," +
                          std::to_string(j) + "," + std::to_string(k) + ")");
        }
        if (in[i][k] && !in[i][j] && !in[j][k]) {
          throw Error(ErrorCode::kNotAnInversionSet,
                      "complement not transitive at (" + std::to_string(i) +
                          "," + std::to_string(j) + "," + std::to_string(k) +
                          ")");
        }
      }
    }
  }
  // The position of x is the number of letters placed before it.
  std::vector<int> word(n, 0);
  for (int x = 1; x <= n; ++x) {
    int before = 0;
    for (int y = 1; y < x; ++y) before += in[y][x] ? 0 : 1;
    for (int y = x + 1; y <= n; ++y) before += in[x][y] ? 1 : 0;
    word[before] = x;
  }
  return PermWord(std::move(word));
}

CircularPermutation ToCycle(const AdmittedVector& v) {
  const int n = v.n();
  InversionSet inversions;
  for (int i = 2; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      if (Delta(v, 1, i, j) == 1) inversions.emplace(i, j);
    }
  }
  return CircularPermutation::FromWord(WordFromInversionSet(n, inversions));
}

AdmittedVector Join(const AdmittedVector& u, const AdmittedVector& v) {
  CheckSameOrder(u, v);
  const int n = u.n();
  TriangularVector x(n);
  for (int gap = 2; gap < n; ++gap) {
    for (int i = 1; i + gap <= n; ++i) {
      const int j = i + gap;
      int best = std::max(u.at(i, j), v.at(i, j));
      for (int p = i + 1; p < j; ++p) {
        best = std::max(best, x.at(i, p) + x.at(p, j));
      }
      x.at(i, j) = best;
    }
  }
  return AdmittedVector(std::move(x));
}

AdmittedVector Meet(const AdmittedVector& u, const AdmittedVector& v) {
  CheckSameOrder(u, v);
  const int n = u.n();
  TriangularVector x(n);
  for (int gap = 2; gap < n; ++gap) {
    for (int i = 1; i + gap <= n; ++i) {
      const int j = i + gap;
      int best = std::min(u.at(i, j), v.at(i, j));
      for (int p = i + 1; p < j; ++p) {
        best = std::min(best, x.at(i, p) + x.at(p, j) + 1);
      }
      x.at(i, j) = best;
    }
  }
  return AdmittedVector(std::move(x));
}

AdmittedVector AntiInv(const AdmittedVector& u) {
  const int n = u.n();
  TriangularVector v(n);
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) v.at(i, j) = j - i - 1 - u.at(i, j);
  }
  return AdmittedVector(std::move(v));
}

AdmittedVector AntiConj(const AdmittedVector& u) {
  const int n = u.n();
  TriangularVector v(n);
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      v.at(i, j) = j - i - 1 - u.at(n + 1 - j, n + 1 - i);
    }
  }
  return AdmittedVector(std::move(v));
}

AdmittedVector Mirror(const AdmittedVector& u) {
  const int n = u.n();
  TriangularVector v(n);
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) v.at(i, j) = u.at(n + 1 - j, n + 1 - i);
  }
  return AdmittedVector(std::move(v));
}

DeltaSequence::DeltaSequence(int n) : n_(n) {
  if (n < 1) throw Error(ErrorCode::kShapeMismatch, "order must be >= 1");
  bits_.assign(static_cast<std::size_t>(n) * n * n, 0);
}

std::size_t DeltaSequence::Index(int i, int j, int k) const {
  if (i < 1 || i >= j || j >= k || k > n_) {
    throw Error(ErrorCode::kIndexOutOfRange,
                "triple needs 1 <= i < j < k <= n");
  }
  return (static_cast<std::size_t>(i - 1) * n_ + (j - 1)) * n_ + (k - 1);
}

DeltaSequence ToDeltaSequence(const AdmittedVector& v) {
  const int n = v.n();
  DeltaSequence a(n);
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      for (int k = j + 1; k <= n; ++k) a.set(i, j, k, Delta(v, i, j, k) == 1);
    }
  }
  return a;
}

AdmittedVector FromDeltaSequence(const DeltaSequence& a) {
  const int n = a.n();
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      for (int k = j + 1; k <= n; ++k) {
        for (int l = k + 1; l <= n; ++l) {
          if (a.at(i, j, k) + a.at(i, k, l) != a.at(i, j, l) + a.at(j, k, l)) {
            throw Error(ErrorCode::kPtolemyViolation,
                        "quadruple (" + std::to_string(i) + "," +
                            std::to_string(j) + "," + std::to_string(k) + "," +
                            std::to_string(l) + ")");
          }
        }
      }
    }
  }
  TriangularVector v(n);
  for (int gap = 2; gap < n; ++gap) {
    for (int i = 1; i + gap <= n; ++i) {
      const int j = i + gap;
      v.at(i, j) = v.at(i, i + 1) + v.at(i + 1, j) + a.at(i, i + 1, j);
    }
  }
  return AdmittedVector::Validate(std::move(v));
}

Triangulation Triangulation::Make(int n, std::vector<Triangle> triangles) {
  auto fail = [&](const std::string& why) {
    return Error(ErrorCode::kInvalidTriangulation, why);
  };
  if (n < 3) throw fail("need at least 3 vertices");
  if (static_cast<int>(triangles.size()) != n - 2) {
    throw fail("expected " + std::to_string(n - 2) + " triangles");
  }
  std::map<std::pair<int, int>, int> edge_count;
  for (auto& t : triangles) {
    std::sort(t.begin(), t.end());
    if (t[0] < 1 || t[2] > n || t[0] == t[1] || t[1] == t[2]) {
      throw fail("bad triangle");
    }
    ++edge_count[{t[0], t[1]}];
    ++edge_count[{t[1], t[2]}];
    ++edge_count[{t[0], t[2]}];
  }
  std::sort(triangles.begin(), triangles.end());
  if (std::adjacent_find(triangles.begin(), triangles.end()) != triangles.end()) {
    throw fail("repeated triangle");
  }
  auto is_side = [n](int a, int b) { return b == a + 1 || (a == 1 && b == n); };
  for (int a = 1; a <= n; ++a) {
    const int b = a == n ? 1 : a + 1;
    const auto key = std::minmax(a, b);
    if (edge_count[{key.first, key.second}] != 1) {
      throw fail("side {" + std::to_string(key.first) + "," +
                 std::to_string(key.second) + "} not in exactly one triangle");
    }
  }
  std::vector<std::pair<int, int>> diagonals;
  for (const auto& [edge, count] : edge_count) {
    if (is_side(edge.first, edge.second)) continue;
    if (count != 2) {
      throw fail("diagonal {" + std::to_string(edge.first) + "," +
                 std::to_string(edge.second) + "} not in exactly two triangles");
    }
    diagonals.push_back(edge);
  }
  for (std::size_t x = 0; x < diagonals.size(); ++x) {
    for (std::size_t y = x + 1; y < diagonals.size(); ++y) {
      const auto [a, b] = diagonals[x];
      const auto [c, d] = diagonals[y];
      if ((a < c && c < b && b < d) || (c < a && a < d && d < b)) {
        throw fail("crossing diagonals");
      }
    }
  }
  return Triangulation(n, std::move(triangles));
}

Triangulation Triangulation::Fan(int n) {
  std::vector<Triangle> triangles;
  for (int k = 2; k + 1 <= n; ++k) triangles.push_back({1, k, k + 1});
  return Make(n, std::move(triangles));
}

bool Triangulation::Contains(const Triangle& t) const {
  Triangle sorted = t;
  std::sort(sorted.begin(), sorted.end());
  return std::binary_search(triangles_.begin(), triangles_.end(), sorted);
}

std::string Triangulation::ToString() const {
  std::string out = "{";
  for (std::size_t x = 0; x < triangles_.size(); ++x) {
    if (x > 0) out += ',';
    const auto& t = triangles_[x];
    if (n_ <= 9) {
      out += std::to_string(t[0]) + std::to_string(t[1]) + std::to_string(t[2]);
    } else {
      out += "(" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," +
             std::to_string(t[2]) + ")";
    }
  }
  return out + "}";
}

namespace {

// Triangulations of the sub-polygon lo, lo+1, ..., hi.
std::vector<std::vector<Triangle>> TriangulateRange(int lo, int hi) {
  if (hi - lo < 2) return {{}};
  std::vector<std::vector<Triangle>> out;
  for (int apex = lo + 1; apex < hi; ++apex) {
    const auto left = TriangulateRange(lo, apex);
    const auto right = TriangulateRange(apex, hi);
    for (const auto& l : left) {
      for (const auto& r : right) {
        std::vector<Triangle> t = l;
        t.insert(t.end(), r.begin(), r.end());
        t.push_back({lo, apex, hi});
        out.push_back(std::move(t));
      }
    }
  }
  return out;
}

}  // namespace

std::vector<Triangulation> AllTriangulations(int n) {
  std::vector<Triangulation> out;
  if (n < 3) return out;
  for (auto& t : TriangulateRange(1, n)) {
    out.push_back(Triangulation::Make(n, std::move(t)));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::int64_t TriangulationSum(const AdmittedVector& v, const Triangulation& t) {
  if (v.n() != t.n()) {
    throw Error(ErrorCode::kInvalidTriangulation,
                "triangulation order differs from vector order");
  }
  std::int64_t sum = 0;
  for (const auto& h : t.triangles()) sum += Delta(v, h[0], h[1], h[2]);
  return sum;
}

Triangulation Mutate(const Triangulation& t, std::array<int, 4> quad) {
  std::sort(quad.begin(), quad.end());
  const auto [a, b, c, d] = quad;
  if (a < 1 || d > t.n() || a == b || b == c || c == d) {
    throw Error(ErrorCode::kQuadNotFlippable, "quad must be 4 distinct vertices");
  }
  const Triangle abc{a, b, c}, acd{a, c, d}, abd{a, b, d}, bcd{b, c, d};
  std::vector<Triangle> next;
  Triangle drop1, drop2, add1, add2;
  if (t.Contains(abc) && t.Contains(acd)) {
    drop1 = abc, drop2 = acd, add1 = abd, add2 = bcd;
  } else if (t.Contains(abd) && t.Contains(bcd)) {
    drop1 = abd, drop2 = bcd, add1 = abc, add2 = acd;
  } else {
    throw Error(ErrorCode::kQuadNotFlippable,
                "no diagonal of the quad splits it into two triangles of " +
                    t.ToString());
  }
  for (const auto& h : t.triangles()) {
    if (h != drop1 && h != drop2) next.push_back(h);
  }
  next.push_back(add1);
  next.push_back(add2);
  return Triangulation::Make(t.n(), std::move(next));
}

std::vector<std::array<int, 4>> FlippableQuads(const Triangulation& t) {
  std::set<std::array<int, 4>> quads;
  const auto& tris = t.triangles();
  for (std::size_t a = 0; a < tris.size(); ++a) {
    for (std::size_t b = a + 1; b < tris.size(); ++b) {
      std::set<int> vertices(tris[a].begin(), tris[a].end());
      vertices.insert(tris[b].begin(), tris[b].end());
      if (vertices.size() != 4) continue;
      std::array<int, 4> quad;
      std::copy(vertices.begin(), vertices.end(), quad.begin());
      quads.insert(quad);
    }
  }
  return {quads.begin(), quads.end()};
}

}  // namespace cyclat
