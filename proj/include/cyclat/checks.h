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

// Named verification runs over CP(n), each compared against an oracle or a
// closed form. Used by `cyclat check` and the Python bindings.

#ifndef CYCLAT_CHECKS_H_
#define CYCLAT_CHECKS_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cyclat {

struct CheckReport {
  std::string check;
  int n = 0;
  bool pass = false;
  std::optional<std::string> witness;
  double elapsed_seconds = 0;
  std::string text;  // one human-readable summary line

  std::string ToJson() const;
  std::string ToText() const;  // "PASS grading n=5: ..."
};

struct CheckOptions {
  std::uint64_t seed = 20260101;
  int workers = 1;
  int samples = 0;  // random pairs/chains where sampled; 0: per-check default
};

struct CheckInfo {
  std::string name;
  int min_n;
  int max_n;  // -1: the configured enumeration cap
  std::string summary;
};

const std::vector<CheckInfo>& Checks();
// Accepts canonical names and the aliases interval-iso, modularity-witness,
// young-limit, alpha-independence. Throws kUnknownCheck.
const CheckInfo& FindCheck(std::string_view name);
// Inclusive bounds on n after resolving -1 against MaxOrder().
std::pair<int, int> CheckRange(const CheckInfo& info);

// Throws kUnknownCheck, or kCapExceeded when n is outside the range.
CheckReport RunCheck(std::string_view name, int n,
                     const CheckOptions& options = {});
// Every check whose range contains n.
std::vector<CheckReport> RunAllChecks(int n, const CheckOptions& options = {});

}  // namespace cyclat

#endif  // CYCLAT_CHECKS_H_
