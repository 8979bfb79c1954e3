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

#include "cyclat/affine.h"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>

#include "cyclat/error.h"

namespace cyclat {

namespace {

// Representative of x mod n in 1..n.
std::int64_t Residue(std::int64_t x, int n) { return x - FloorDiv(x - 1, n) * n; }

void CheckSameOrder(const AffineWindow& f, const AffineWindow& g) {
  if (f.n() != g.n()) {
    throw Error(ErrorCode::kShapeMismatch, "windows of different order");
  }
}

}  // namespace

AffineWindow::AffineWindow(std::vector<std::int64_t> entries)
    : a_(std::move(entries)) {
  const int n = this->n();
  if (n < 1) throw Error(ErrorCode::kInvalidWindow, "empty window");
  std::vector<bool> seen(n + 1, false);
  std::int64_t sum = 0;
  for (std::int64_t x : a_) {
    const auto r = Residue(x, n);
    if (seen[r]) {
      throw Error(ErrorCode::kInvalidWindow,
                  ToString() + " has two entries congruent mod " +
                      std::to_string(n));
    }
    seen[r] = true;
    sum += x;
  }
  if (sum != static_cast<std::int64_t>(n) * (n + 1) / 2) {
    throw Error(ErrorCode::kInvalidWindow,
                ToString() + " does not sum to " +
                    std::to_string(static_cast<std::int64_t>(n) * (n + 1) / 2));
  }
}

AffineWindow AffineWindow::Identity(int n) {
  std::vector<std::int64_t> a(n);
  std::iota(a.begin(), a.end(), 1);
  return AffineWindow(std::move(a));
}

AffineWindow AffineWindow::Parse(std::string_view text) {
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() &&
           std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
    }
  };
  auto fail = [&](const std::string& what) {
    return Error(ErrorCode::kParseError,
                 what + " at position " + std::to_string(pos) + " in \"" +
                     std::string(text) + "\"");
  };
  skip_ws();
  if (pos >= text.size() || text[pos] != '[') throw fail("expected '['");
  ++pos;
  std::vector<std::int64_t> entries;
  skip_ws();
  if (pos < text.size() && text[pos] == ']') throw fail("empty window");
  while (true) {
    skip_ws();
    bool negative = false;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
      negative = text[pos] == '-';
      ++pos;
    }
    if (pos >= text.size() ||
        !std::isdigit(static_cast<unsigned char>(text[pos]))) {
      throw fail("expected integer");
    }
    std::int64_t value = 0;
    while (pos < text.size() &&
           std::isdigit(static_cast<unsigned char>(text[pos]))) {
      value = value * 10 + (text[pos] - '0');
      if (value > (std::int64_t{1} << 40)) throw fail("entry too large");
      ++pos;
    }
    entries.push_back(negative ? -value : value);
    skip_ws();
    if (pos < text.size() && text[pos] == ',') {
      ++pos;
      continue;
    }
    if (pos < text.size() && text[pos] == ']') {
      ++pos;
      break;
    }
    throw fail("expected ',' or ']'");
  }
  skip_ws();
  if (pos != text.size()) throw fail("trailing characters");
  try {
    return AffineWindow(std::move(entries));
  } catch (const Error& e) {
    throw Error(ErrorCode::kParseError, e.what());
  }
}

std::int64_t AffineWindow::Apply(std::int64_t x) const {
  const int n = this->n();
  const std::int64_t q = FloorDiv(x - 1, n);
  const std::int64_t r = x - q * n;  // in 1..n
  return a_[r - 1] + q * n;
}

AffineWindow AffineWindow::Compose(const AffineWindow& g) const {
  CheckSameOrder(*this, g);
  std::vector<std::int64_t> out(a_.size());
  for (int i = 1; i <= n(); ++i) out[i - 1] = Apply(g[i]);
  return AffineWindow(std::move(out));
}

AffineWindow AffineWindow::Inverse() const {
  const int n = this->n();
  std::vector<std::int64_t> out(n);
  for (int i = 1; i <= n; ++i) {
    // f(i) = y + qn with y in 1..n, so f^{-1}(y) = i - qn.
    const std::int64_t q = FloorDiv(a_[i - 1] - 1, n);
    const std::int64_t y = a_[i - 1] - q * n;
    out[y - 1] = i - q * n;
  }
  return AffineWindow(std::move(out));
}

bool AffineWindow::IsIncreasing() const {
  return std::is_sorted(a_.begin(), a_.end());
}

std::string AffineWindow::ToString() const {
  std::string out = "[";
  for (std::size_t i = 0; i < a_.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(a_[i]);
  }
  return out + "]";
}

AffineWindow LeftMultiplySk(int k, const AffineWindow& f) {
  const int n = f.n();
  if (k < 0 || k >= n) {
    throw Error(ErrorCode::kIndexOutOfRange,
                "generator index must be in 0.." + std::to_string(n - 1));
  }
  if (n == 1) return f;
  std::vector<std::int64_t> b(f.entries().begin(), f.entries().end());
  const std::int64_t lo = Residue(k, n);      // k mod n, in 1..n
  const std::int64_t hi = Residue(k + 1, n);  // k+1 mod n
  for (auto& x : b) {
    const auto r = Residue(x, n);
    if (r == lo) {
      ++x;
    } else if (r == hi) {
      --x;
    }
  }
  return AffineWindow(std::move(b));
}

namespace {

// Number of k >= 0 with p + kn > i and a_p + kn < a_i.
std::int64_t CountShifts(const AffineWindow& f, int i, int p) {
  const int n = f.n();
  const std::int64_t k_min = p > i ? 0 : 1;
  const std::int64_t k_max = FloorDiv(f[i] - f[p] - 1, n);
  return std::max<std::int64_t>(0, k_max - k_min + 1);
}

}  // namespace

std::vector<PositionInversion> Inversions(const AffineWindow& f) {
  const int n = f.n();
  std::vector<PositionInversion> out;
  for (int i = 1; i <= n; ++i) {
    for (int p = 1; p <= n; ++p) {
      const std::int64_t k_min = p > i ? 0 : 1;
      const std::int64_t count = CountShifts(f, i, p);
      for (std::int64_t k = k_min; k < k_min + count; ++k) {
        out.push_back({i, p + k * n});
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::int64_t Length(const AffineWindow& f) {
  std::int64_t total = 0;
  for (int i = 1; i <= f.n(); ++i) {
    for (int p = 1; p <= f.n(); ++p) total += CountShifts(f, i, p);
  }
  return total;
}

TriangularVector InversionCounts(const AffineWindow& f) {
  if (!f.IsIncreasing()) {
    throw Error(ErrorCode::kNotInInterval,
                f.ToString() + " is not increasing");
  }
  const int n = f.n();
  TriangularVector counts(n);
  for (int p = 1; p <= n; ++p) {
    for (int i = p + 1; i <= n; ++i) {
      counts.at(p, i) = static_cast<int>(FloorDiv(f[i] - f[p], n));
    }
  }
  return counts;
}

bool WeakLeq(const AffineWindow& f, const AffineWindow& g) {
  CheckSameOrder(f, g);
  if (f.IsIncreasing() && g.IsIncreasing()) {
    const int n = f.n();
    for (int i = 1; i <= n; ++i) {
      for (int j = i + 1; j <= n; ++j) {
        if (FloorDiv(f[j] - f[i], n) > FloorDiv(g[j] - g[i], n)) return false;
      }
    }
    return true;
  }
  const auto inv_f = Inversions(f);
  const auto inv_g = Inversions(g);
  return std::includes(inv_g.begin(), inv_g.end(), inv_f.begin(), inv_f.end());
}

AffineWindow WindowOfVector(const AdmittedVector& v) {
  const int n = v.n();
  std::vector<std::int64_t> a(n);
  for (int i = 1; i <= n; ++i) {
    std::int64_t x = i;
    for (int p = 1; p < i; ++p) x += v.at(p, i);
    for (int p = i + 1; p <= n; ++p) x -= v.at(i, p);
    a[i - 1] = x;
  }
  return AffineWindow(std::move(a));
}

bool InInterval(const AffineWindow& f) {
  if (!f.IsIncreasing()) return false;
  const int n = f.n();
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      if (FloorDiv(f[j] - f[i], n) > j - i - 1) return false;
    }
  }
  return true;
}

AdmittedVector VectorOfWindow(const AffineWindow& f) {
  if (!InInterval(f)) {
    throw Error(ErrorCode::kNotInInterval,
                f.ToString() + " is not in [id, f_c]");
  }
  return AdmittedVector::Validate(InversionCounts(f));
}

AffineWindow TopWindow(int n) {
  if (n < 1) throw Error(ErrorCode::kInvalidWindow, "order must be >= 1");
  std::vector<std::int64_t> c(n);
  c[0] = -static_cast<std::int64_t>(n) * (n - 3) / 2;
  for (int i = 1; i < n; ++i) c[i] = c[i - 1] + n - 1;
  return AffineWindow(std::move(c));
}

CircularPermutation Project(const AffineWindow& f) {
  if (!InInterval(f)) {
    throw Error(ErrorCode::kNotInInterval,
                f.ToString() + " is not in [id, f_c]");
  }
  // The residues give the position of each letter in the cycle word.
  std::vector<int> word(f.n());
  for (int i = 1; i <= f.n(); ++i) {
    word[Residue(f[i], f.n()) - 1] = i;
  }
  return CircularPermutation::FromLetters(std::move(word));
}

bool WindowSelfCheck(const AffineWindow& f) {
  const int n = f.n();
  for (int i = 1; i <= n; ++i) {
    std::int64_t rhs = i;
    for (int p = i + 1; p <= n; ++p) rhs -= FloorDiv(f[p] - f[i], n);
    for (int p = 1; p < i; ++p) rhs += FloorDiv(f[i] - f[p], n);
    if (rhs != f[i]) return false;
  }
  return true;
}

AffineWindow WindowOfFactor(int n, const SijkFactor& s) {
  if (s.i < 1 || s.i >= s.j || s.j > n) {
    throw Error(ErrorCode::kIndexOutOfRange, "s_ijk needs 1 <= i < j <= n");
  }
  std::vector<std::int64_t> a(n);
  std::iota(a.begin(), a.end(), 1);
  a[s.i - 1] = s.j - static_cast<std::int64_t>(s.k) * n;
  a[s.j - 1] = s.i + static_cast<std::int64_t>(s.k) * n;
  return AffineWindow(std::move(a));
}

std::vector<SijkFactor> FactorizeAlongChain(
    int n, std::span<const DescentLabel> chain) {
  AdmittedVector v = AdmittedVector::Zero(n);
  std::map<DescentLabel, int> seen;
  std::vector<SijkFactor> factors;
  for (std::size_t p = 0; p < chain.size(); ++p) {
    const auto& label = chain[p];
    if (label.r < 1 || label.r + 1 >= label.s || label.s > n ||
        !CanIncrement(v, label.r, label.s)) {
      throw Error(ErrorCode::kNotAChain,
                  "step " + std::to_string(p + 1) + " label " +
                      label.ToString() + " does not cover " + v.ToString());
    }
    v = Incremented(v, label.r, label.s);
    factors.push_back({label.r, label.s, ++seen[label]});
  }
  return factors;
}

AffineWindow EvaluateFactors(int n, std::span<const SijkFactor> factors) {
  AffineWindow f = AffineWindow::Identity(n);
  for (const auto& s : factors) f = f.Compose(WindowOfFactor(n, s));
  return f;
}

}  // namespace cyclat
