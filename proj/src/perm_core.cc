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

#include "cyclat/perm_core.h"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "cyclat/error.h"

namespace cyclat {

PermWord::PermWord(std::vector<int> letters) : letters_(std::move(letters)) {
  const int n = size();
  if (n < 1) throw Error(ErrorCode::kInvalidPermutation, "empty word");
  std::vector<bool> seen(n + 1, false);
  for (int x : letters_) {
    if (x < 1 || x > n || seen[x]) {
      throw Error(ErrorCode::kInvalidPermutation,
                  "not a permutation of 1.." + std::to_string(n));
    }
    seen[x] = true;
  }
}

PermWord PermWord::Identity(int n) {
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  return PermWord(std::move(w));
}

PermWord PermWord::Reversed(int n) {
  std::vector<int> w(n);
  for (int i = 0; i < n; ++i) w[i] = n - i;
  return PermWord(std::move(w));
}

std::vector<int> PermWord::Positions() const {
  std::vector<int> pos(letters_.size() + 1, -1);
  for (int p = 0; p < size(); ++p) pos[letters_[p]] = p;
  return pos;
}

PermWord PermWord::Inverse() const {
  std::vector<int> inv(letters_.size());
  for (int i = 0; i < size(); ++i) inv[letters_[i] - 1] = i + 1;
  return PermWord(std::move(inv));
}

PermWord PermWord::Compose(const PermWord& other) const {
  if (other.size() != size()) {
    throw Error(ErrorCode::kShapeMismatch, "compose: orders differ");
  }
  std::vector<int> out(letters_.size());
  for (int i = 0; i < size(); ++i) out[i] = letters_[other.letters_[i] - 1];
  return PermWord(std::move(out));
}

std::string PermWord::ToString() const {
  std::string out;
  const bool compact = size() <= 9;
  for (int i = 0; i < size(); ++i) {
    if (!compact && i > 0) out += ',';
    out += std::to_string(letters_[i]);
  }
  return out;
}

int Gamma(const PermWord& w, int i, int j) {
  if (i < 1 || i >= j || j > w.size()) {
    throw Error(ErrorCode::kIndexOutOfRange,
                "gamma(" + std::to_string(i) + "," + std::to_string(j) +
                    ") needs 1 <= i < j <= " + std::to_string(w.size()));
  }
  const auto pos = w.Positions();
  return pos[j] < pos[i] ? 1 : 0;
}

std::int64_t RankN(const PermWord& w) {
  const int n = w.size();
  const auto pos = w.Positions();
  std::int64_t rank = 0;
  for (int k = 1; k < n; ++k) {
    if (pos[k + 1] < pos[k]) rank += static_cast<std::int64_t>(k) * (n - k);
  }
  // Inversions by value are ordinary inversions of the word.
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (w[a] > w[b]) --rank;
    }
  }
  return rank;
}

std::string DescentLabel::ToString() const {
  return "(" + std::to_string(r) + "," + std::to_string(s) + ")";
}

CircularPermutation CircularPermutation::FromWord(const PermWord& cycle_word) {
  const auto letters = cycle_word.letters();
  const auto one = std::find(letters.begin(), letters.end(), 1);
  std::vector<int> canon(letters.size());
  std::rotate_copy(letters.begin(), one, letters.end(), canon.begin());
  return CircularPermutation(PermWord(std::move(canon)));
}

CircularPermutation CircularPermutation::FromLetters(
    std::vector<int> cycle_word) {
  return FromWord(PermWord(std::move(cycle_word)));
}

CircularPermutation CircularPermutation::Bottom(int n) {
  return CircularPermutation(PermWord::Identity(n));
}

CircularPermutation CircularPermutation::Top(int n) {
  return FromWord(PermWord::Reversed(n));
}

CircularPermutation CircularPermutation::Parse(std::string_view text) {
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
    }
  };
  auto fail = [&](const std::string& what) -> Error {
    return Error(ErrorCode::kParseError,
                 what + " at position " + std::to_string(pos) + " in \"" +
                     std::string(text) + "\"");
  };
  skip_ws();
  if (pos >= text.size() || text[pos] != '(') throw fail("expected '('");
  ++pos;
  const bool has_commas = text.find(',') != std::string_view::npos;
  std::vector<int> letters;
  skip_ws();
  while (pos < text.size() && text[pos] != ')') {
    if (!std::isdigit(static_cast<unsigned char>(text[pos]))) {
      throw fail("expected digit");
    }
    if (has_commas) {
      int value = 0;
      while (pos < text.size() &&
             std::isdigit(static_cast<unsigned char>(text[pos]))) {
        value = value * 10 + (text[pos] - '0');
        if (value > 1000000) throw fail("letter too large");
        ++pos;
      }
      letters.push_back(value);
      skip_ws();
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        skip_ws();
        if (pos < text.size() && text[pos] == ')') throw fail("trailing ','");
      } else if (pos < text.size() && text[pos] != ')') {
        throw fail("expected ',' or ')'");
      }
    } else {
      letters.push_back(text[pos] - '0');
      ++pos;
      skip_ws();
    }
  }
  if (pos >= text.size()) throw fail("expected ')'");
  ++pos;
  skip_ws();
  if (pos != text.size()) throw fail("trailing characters");
  try {
    return FromLetters(std::move(letters));
  } catch (const Error& e) {
    throw Error(ErrorCode::kParseError, std::string(e.what()) + " in \"" +
                                            std::string(text) + "\"");
  }
}

PermWord CircularPermutation::AsPermutation() const {
  const int n = this->n();
  std::vector<int> map(n);
  for (int p = 0; p < n; ++p) map[canon_[p] - 1] = canon_[(p + 1) % n];
  return PermWord(std::move(map));
}

CircularPermutation CircularPermutation::FromPermutation(const PermWord& sigma) {
  const int n = sigma.size();
  std::vector<int> word;
  word.reserve(n);
  int x = 1;
  do {
    word.push_back(x);
    x = sigma[x - 1];
  } while (x != 1 && static_cast<int>(word.size()) <= n);
  if (static_cast<int>(word.size()) != n) {
    throw Error(ErrorCode::kInvalidPermutation, "not an n-cycle");
  }
  return CircularPermutation(PermWord(std::move(word)));
}

std::string CircularPermutation::ToString() const {
  std::string out = "(";
  for (int i = 0; i < n(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(canon_[i]);
  }
  return out + ")";
}

std::uint64_t CircularPermutation::Key() const {
  std::uint64_t key = 0;
  if (n() <= 16) {
    for (int i = 0; i < n(); ++i) key = (key << 4) | (canon_[i] - 1);
    return key;
  }
  key = 1469598103934665603ULL;
  for (int i = 0; i < n(); ++i) {
    key = (key ^ static_cast<std::uint64_t>(canon_[i])) * 1099511628211ULL;
  }
  return key;
}

std::int64_t RankN(const CircularPermutation& sigma) {
  return RankN(sigma.canon());
}

std::vector<DescentLabel> LargeCircularDescents(
    const CircularPermutation& sigma) {
  const int n = sigma.n();
  std::vector<DescentLabel> out;
  for (int p = 0; p < n; ++p) {
    const int b = sigma[p];
    const int before = sigma[(p + n - 1) % n];
    if (before > b + 1) out.push_back({b, before});
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<DescentLabel> LargeCircularAscents(
    const CircularPermutation& sigma) {
  const int n = sigma.n();
  std::vector<DescentLabel> out;
  for (int p = 0; p < n; ++p) {
    const int r = sigma[p];
    const int after = sigma[(p + 1) % n];
    if (after > r + 1) out.push_back({r, after});
  }
  std::sort(out.begin(), out.end());
  return out;
}

CircularPermutation SwapLetters(const CircularPermutation& sigma, int r,
                                int s) {
  std::vector<int> word(sigma.canon().letters().begin(),
                        sigma.canon().letters().end());
  for (int& x : word) {
    if (x == r) {
      x = s;
    } else if (x == s) {
      x = r;
    }
  }
  return CircularPermutation::FromLetters(std::move(word));
}

std::vector<Cover> CoversUp(const CircularPermutation& sigma) {
  std::vector<Cover> out;
  for (const auto& label : LargeCircularDescents(sigma)) {
    out.push_back({label, SwapLetters(sigma, label.r, label.s)});
  }
  return out;
}

std::vector<Cover> CoversDown(const CircularPermutation& sigma) {
  std::vector<Cover> out;
  for (const auto& label : LargeCircularAscents(sigma)) {
    out.push_back({label, SwapLetters(sigma, label.r, label.s)});
  }
  return out;
}

CircularPermutation Invert(const CircularPermutation& sigma) {
  std::vector<int> word(sigma.canon().letters().rbegin(),
                        sigma.canon().letters().rend());
  return CircularPermutation::FromLetters(std::move(word));
}

CircularPermutation ConjugateW0(const CircularPermutation& sigma) {
  const int n = sigma.n();
  std::vector<int> word(sigma.canon().letters().begin(),
                        sigma.canon().letters().end());
  for (int& x : word) x = n + 1 - x;
  return CircularPermutation::FromLetters(std::move(word));
}

void ForEachCircularPermutation(
    int n, const std::function<void(const CircularPermutation&)>& visit) {
  if (n < 1) return;
  std::vector<int> word(n);
  std::iota(word.begin(), word.end(), 1);
  do {
    visit(CircularPermutation::FromLetters(word));
  } while (std::next_permutation(word.begin() + 1, word.end()));
}

}  // namespace cyclat
