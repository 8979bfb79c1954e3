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

// Permutation words, circular permutations (n-cycles) and the cover relation
// of the circular-permutation lattice CP(n).
//
// All letters are 1-based values. A circular permutation is stored as the
// unique rotation of its cycle word that starts with 1.

#ifndef CYCLAT_PERM_CORE_H_
#define CYCLAT_PERM_CORE_H_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cyclat {

// A permutation of {1,...,n} viewed as a word.
class PermWord {
 public:
  // Throws kInvalidPermutation unless `letters` is a permutation of 1..n.
  explicit PermWord(std::vector<int> letters);

  static PermWord Identity(int n);
  static PermWord Reversed(int n);  // n ... 2 1

  int size() const { return static_cast<int>(letters_.size()); }
  int operator[](int pos) const { return letters_[pos]; }
  std::span<const int> letters() const { return letters_; }

  // position[value] for value in 1..n (index 0 unused).
  std::vector<int> Positions() const;

  // Word of the inverse permutation, reading the word as i -> letters[i-1].
  PermWord Inverse() const;
  // (this o other)(x) = this(other(x)).
  PermWord Compose(const PermWord& other) const;

  std::string ToString() const;  // "52341"

  friend bool operator==(const PermWord&, const PermWord&) = default;
  friend auto operator<=>(const PermWord&, const PermWord&) = default;

 private:
  std::vector<int> letters_;
};

// gamma_ij(w): 1 if j appears before i in w ("inversion by value").
// Requires 1 <= i < j <= n, else throws kIndexOutOfRange.
int Gamma(const PermWord& w, int i, int j);

// The rank function N(w) = sum_k k(n-k) gamma_{k,k+1}(w) - sum_{i<j} gamma_ij(w).
std::int64_t RankN(const PermWord& w);

// Label (r,s) of a Hasse edge: the transposition exchanging r and s,
// always with r + 1 < s.
struct DescentLabel {
  int r = 0;
  int s = 0;

  std::string ToString() const;  // "(1,5)"
  friend bool operator==(const DescentLabel&, const DescentLabel&) = default;
  friend auto operator<=>(const DescentLabel&, const DescentLabel&) = default;
};

class CircularPermutation {
 public:
  // Any rotation of the cycle word; the stored form is canonical.
  static CircularPermutation FromWord(const PermWord& cycle_word);
  static CircularPermutation FromLetters(std::vector<int> cycle_word);

  static CircularPermutation Bottom(int n);  // (1,2,...,n)
  static CircularPermutation Top(int n);     // (n,...,2,1) = (1,n,n-1,...,2)

  // Accepts "(1,6,4,2,3,5)", "(164235)" for n <= 9, any rotation.
  static CircularPermutation Parse(std::string_view text);

  int n() const { return canon_.size(); }
  const PermWord& canon() const { return canon_; }
  int operator[](int pos) const { return canon_[pos]; }

  // The cycle as a map: a_i -> a_{i+1}.
  PermWord AsPermutation() const;
  static CircularPermutation FromPermutation(const PermWord& sigma);

  std::string ToString() const;  // "(1,6,4,2,3,5)"

  // Packs the canonical word into 64 bits (n <= 16).
  std::uint64_t Key() const;

  friend bool operator==(const CircularPermutation&,
                         const CircularPermutation&) = default;
  friend auto operator<=>(const CircularPermutation&,
                          const CircularPermutation&) = default;

 private:
  explicit CircularPermutation(PermWord canon) : canon_(std::move(canon)) {}
  PermWord canon_;
};

std::int64_t RankN(const CircularPermutation& sigma);

// Letters b whose cyclic predecessor s exceeds b + 1, reported as (b, s).
// These label the covers above sigma. Sorted by label.
std::vector<DescentLabel> LargeCircularDescents(const CircularPermutation& sigma);

// Letters r whose cyclic successor s exceeds r + 1, reported as (r, s).
// These label the covers below sigma. Sorted by label.
std::vector<DescentLabel> LargeCircularAscents(const CircularPermutation& sigma);

struct Cover {
  DescentLabel label;
  CircularPermutation target;
};

// Swaps r and s for every large circular descent (r,s).
std::vector<Cover> CoversUp(const CircularPermutation& sigma);
// Swaps r and s for every large circular ascent (r,s).
std::vector<Cover> CoversDown(const CircularPermutation& sigma);

// Exchanges the letters r and s in the cycle word.
CircularPermutation SwapLetters(const CircularPermutation& sigma, int r, int s);

// sigma^{-1}: reversal of the cycle word.
CircularPermutation Invert(const CircularPermutation& sigma);
// w0 o sigma o w0: every letter k becomes n + 1 - k.
CircularPermutation ConjugateW0(const CircularPermutation& sigma);

// Binomial coefficient C(n, 3), the rank of the top element.
inline std::int64_t TopRank(int n) {
  return static_cast<std::int64_t>(n) * (n - 1) * (n - 2) / 6;
}

// Calls `visit` for each of the (n-1)! circular permutations of order n,
// in lexicographic order of canonical words.
void ForEachCircularPermutation(
    int n, const std::function<void(const CircularPermutation&)>& visit);

}  // namespace cyclat

template <>
struct std::hash<cyclat::CircularPermutation> {
  std::size_t operator()(const cyclat::CircularPermutation& c) const noexcept {
    return std::hash<std::uint64_t>{}(c.Key());
  }
};

#endif  // CYCLAT_PERM_CORE_H_
