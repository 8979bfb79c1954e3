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

#include "cyclat/io.h"

#include <cctype>
#include <map>
#include <sstream>

#include "cyclat/error.h"
#include "json.hpp"

namespace cyclat {

using nlohmann::json;

namespace {

std::string_view Trimmed(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) {
    text.remove_prefix(1);
  }
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) {
    text.remove_suffix(1);
  }
  return text;
}

json ParseJson(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::kParseError,
                "invalid JSON at byte " + std::to_string(e.byte) + ": " +
                    std::string(text));
  }
}

int ExpectOrder(const json& object, std::size_t fallback) {
  if (!object.contains("n")) return static_cast<int>(fallback);
  if (!object["n"].is_number_integer()) {
    throw Error(ErrorCode::kParseError, "\"n\" must be an integer");
  }
  return object["n"].get<int>();
}

template <typename T>
std::vector<T> IntegerArray(const json& value, const char* what) {
  if (!value.is_array()) {
    throw Error(ErrorCode::kParseError, std::string(what) + " must be an array");
  }
  std::vector<T> out;
  for (const auto& x : value) {
    if (!x.is_number_integer()) {
      throw Error(ErrorCode::kParseError,
                  std::string(what) + " must hold integers");
    }
    out.push_back(x.get<T>());
  }
  return out;
}

}  // namespace

std::string_view FormName(Form form) {
  switch (form) {
    case Form::kCycle: return "cycle";
    case Form::kVector: return "vector";
    case Form::kWindow: return "window";
  }
  return "?";
}

std::optional<Form> FormFromName(std::string_view name) {
  if (name == "cycle") return Form::kCycle;
  if (name == "vector") return Form::kVector;
  if (name == "window") return Form::kWindow;
  return std::nullopt;
}

Form DetectForm(std::string_view text) {
  text = Trimmed(text);
  if (text.empty()) throw Error(ErrorCode::kParseError, "empty input");
  if (text.front() == '(') return Form::kCycle;
  if (text.front() == '{') {
    const json object = ParseJson(text);
    if (object.contains("cycle")) return Form::kCycle;
    if (object.contains("v")) return Form::kVector;
    if (object.contains("window")) return Form::kWindow;
    throw Error(ErrorCode::kParseError,
                "JSON object needs one of \"cycle\", \"v\", \"window\"");
  }
  if (text.front() == '[') {
    std::string_view rest = Trimmed(text.substr(1));
    if (!rest.empty() && rest.front() == '[') return Form::kVector;
    return Form::kWindow;
  }
  throw Error(ErrorCode::kParseError,
              "cannot tell the form of \"" + std::string(text) + "\"");
}

AdmittedVector ParseVector(std::string_view text) {
  text = Trimmed(text);
  const json value = ParseJson(text);
  const json* rows = &value;
  int n = 0;
  if (value.is_object()) {
    if (!value.contains("v")) {
      throw Error(ErrorCode::kParseError, "vector JSON needs \"v\"");
    }
    rows = &value["v"];
    if (!rows->is_array()) {
      throw Error(ErrorCode::kParseError, "\"v\" must be an array of rows");
    }
    n = ExpectOrder(value, rows->size() + 1);
  } else if (value.is_array()) {
    n = static_cast<int>(value.size()) + 1;
  } else {
    throw Error(ErrorCode::kParseError, "vector must be an array of rows");
  }
  std::vector<std::vector<int>> parsed;
  for (const auto& row : *rows) parsed.push_back(IntegerArray<int>(row, "row"));
  if (n < 1) throw Error(ErrorCode::kParseError, "order must be >= 1");
  try {
    return AdmittedVector::Validate(TriangularVector::FromRows(n, parsed));
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kShapeMismatch) {
      throw Error(ErrorCode::kParseError, e.what());
    }
    throw;
  }
}

AffineWindow ParseWindow(std::string_view text) {
  text = Trimmed(text);
  if (!text.empty() && text.front() == '{') {
    const json value = ParseJson(text);
    if (!value.contains("window")) {
      throw Error(ErrorCode::kParseError, "window JSON needs \"window\"");
    }
    auto entries = IntegerArray<std::int64_t>(value["window"], "window");
    if (ExpectOrder(value, entries.size()) != static_cast<int>(entries.size())) {
      throw Error(ErrorCode::kParseError, "\"n\" disagrees with window length");
    }
    try {
      return AffineWindow(std::move(entries));
    } catch (const Error& e) {
      throw Error(ErrorCode::kParseError, e.what());
    }
  }
  return AffineWindow::Parse(text);
}

CircularPermutation ParseCycle(std::string_view text) {
  text = Trimmed(text);
  if (!text.empty() && text.front() == '{') {
    const json value = ParseJson(text);
    if (!value.contains("cycle")) {
      throw Error(ErrorCode::kParseError, "cycle JSON needs \"cycle\"");
    }
    auto letters = IntegerArray<int>(value["cycle"], "cycle");
    if (ExpectOrder(value, letters.size()) != static_cast<int>(letters.size())) {
      throw Error(ErrorCode::kParseError, "\"n\" disagrees with cycle length");
    }
    try {
      return CircularPermutation::FromLetters(std::move(letters));
    } catch (const Error& e) {
      throw Error(ErrorCode::kParseError, e.what());
    }
  }
  return CircularPermutation::Parse(text);
}

CircularPermutation ParseElement(std::string_view text, std::optional<Form> as) {
  switch (as ? *as : DetectForm(text)) {
    case Form::kCycle: return ParseCycle(text);
    case Form::kVector: return ToCycle(ParseVector(text));
    case Form::kWindow: return Project(ParseWindow(text));
  }
  throw Error(ErrorCode::kParseError, "unknown form");
}

std::string VectorToJson(const AdmittedVector& v) {
  nlohmann::ordered_json out;
  out["n"] = v.n();
  out["v"] = v.raw().Rows();
  return out.dump();
}

std::string WindowToJson(const AffineWindow& f) {
  nlohmann::ordered_json out;
  out["n"] = f.n();
  out["window"] = std::vector<std::int64_t>(f.entries().begin(), f.entries().end());
  return out.dump();
}

std::string CycleToJson(const CircularPermutation& sigma) {
  nlohmann::ordered_json out;
  out["n"] = sigma.n();
  out["cycle"] = std::vector<int>(sigma.canon().letters().begin(),
                                  sigma.canon().letters().end());
  return out.dump();
}

std::string FormatElement(const CircularPermutation& sigma, Form form,
                          bool as_json) {
  switch (form) {
    case Form::kCycle:
      return as_json ? CycleToJson(sigma) : sigma.ToString();
    case Form::kVector: {
      const auto v = ToVector(sigma);
      return as_json ? VectorToJson(v) : v.ToString();
    }
    case Form::kWindow: {
      const auto f = WindowOfVector(ToVector(sigma));
      return as_json ? WindowToJson(f) : f.ToString();
    }
  }
  return {};
}

std::string DiagramToDot(const HasseDiagram& diagram) {
  std::ostringstream out;
  out << "digraph CP" << diagram.n() << " {\n";
  out << "  rankdir=BT;\n";
  out << "  node [shape=plaintext];\n";
  std::map<std::int64_t, std::vector<int>> by_rank;
  for (int x = 0; x < diagram.size(); ++x) by_rank[diagram.rank(x)].push_back(x);
  for (int x = 0; x < diagram.size(); ++x) {
    out << "  n" << x << " [label=\"" << diagram.node(x).ToString() << "\"];\n";
  }
  for (const auto& [rank, nodes] : by_rank) {
    out << "  { rank=same;";
    for (int x : nodes) out << " n" << x << ";";
    out << " }  // rank " << rank << "\n";
  }
  for (const auto& e : diagram.edges()) {
    out << "  n" << e.lower << " -> n" << e.upper << " [label=\""
        << e.label.ToString() << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

std::string DiagramToJson(const HasseDiagram& diagram) {
  nlohmann::ordered_json out;
  out["n"] = diagram.n();
  auto nodes = nlohmann::ordered_json::array();
  auto ranks = nlohmann::ordered_json::array();
  for (int x = 0; x < diagram.size(); ++x) {
    nodes.push_back(diagram.node(x).ToString());
    ranks.push_back(diagram.rank(x));
  }
  auto edges = nlohmann::ordered_json::array();
  for (const auto& e : diagram.edges()) {
    edges.push_back({{"lower", e.lower},
                     {"upper", e.upper},
                     {"label", {e.label.r, e.label.s}}});
  }
  out["nodes"] = std::move(nodes);
  out["ranks"] = std::move(ranks);
  out["edges"] = std::move(edges);
  return out.dump() + "\n";
}

}  // namespace cyclat
