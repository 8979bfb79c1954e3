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

// Text and JSON forms of the three incarnations, and diagram exports.
//
//   cycle   "(1,6,4,2,3,5)"            {"n":6,"cycle":[1,6,4,2,3,5]}
//   vector  "[[0,1,2],[0,1],[0]]"      {"n":4,"v":[[0,1,2],[0,1],[0]]}
//   window  "[-2,1,4,7]"               {"n":4,"window":[-2,1,4,7]}
//
// Vector row i lists v_{i,i+1},...,v_{i,n}.

#ifndef CYCLAT_IO_H_
#define CYCLAT_IO_H_

#include <optional>
#include <string>
#include <string_view>

#include "cyclat/admitted.h"
#include "cyclat/affine.h"
#include "cyclat/perm_core.h"
#include "cyclat/poset.h"

namespace cyclat {

enum class Form { kCycle, kVector, kWindow };

std::string_view FormName(Form form);
// "cycle" / "vector" / "window"; std::nullopt otherwise.
std::optional<Form> FormFromName(std::string_view name);

// By leading character: '(' cycle, "[[" vector rows, '[' window; JSON
// objects by their keys. Throws kParseError when undecidable.
Form DetectForm(std::string_view text);

AdmittedVector ParseVector(std::string_view text);  // rows or JSON object
AffineWindow ParseWindow(std::string_view text);    // brackets or JSON object
CircularPermutation ParseCycle(std::string_view text);  // text or JSON object

// Parses any incarnation and maps it to its circular permutation.
// `as` overrides detection.
CircularPermutation ParseElement(std::string_view text,
                                 std::optional<Form> as = std::nullopt);

std::string FormatElement(const CircularPermutation& sigma, Form form,
                          bool json);

std::string VectorToJson(const AdmittedVector& v);
std::string WindowToJson(const AffineWindow& f);
std::string CycleToJson(const CircularPermutation& sigma);

// Graphviz: one node per element labeled with its cycle, one edge per cover
// labeled "(r,s)", nodes of equal rank grouped with rank=same.
std::string DiagramToDot(const HasseDiagram& diagram);
// {"n":..,"nodes":[..],"ranks":[..],"edges":[{"lower":..,"upper":..,"label":[r,s]}]}
std::string DiagramToJson(const HasseDiagram& diagram);

}  // namespace cyclat

#endif  // CYCLAT_IO_H_
