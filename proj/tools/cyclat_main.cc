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

// cyclat: conversions, lattice operations, poset export and verification
// runs on circular permutations.
//
// Exit status: 0 success, 1 a check failed, 2 usage or input error.

#include <cctype>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cyclat/admitted.h"
#include "cyclat/affine.h"
#include "cyclat/checks.h"
#include "cyclat/error.h"
#include "cyclat/io.h"
#include "cyclat/perm_core.h"
#include "cyclat/poset.h"
#include "json.hpp"

namespace {

constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

using cyclat::CircularPermutation;
using cyclat::Form;

std::optional<Form> FormFlag(const std::string& name) {
  if (name.empty()) return std::nullopt;
  auto form = cyclat::FormFromName(name);
  if (!form) {
    throw cyclat::Error(cyclat::ErrorCode::kParseError,
                        "unknown form \"" + name + "\"");
  }
  return form;
}

struct Element {
  CircularPermutation sigma;
  Form form;
};

Element ReadElement(const std::string& text, const std::string& as) {
  const auto form = FormFlag(as);
  const Form detected = form ? *form : cyclat::DetectForm(text);
  return {cyclat::ParseElement(text, detected), detected};
}

// "(1,5)(2,4)", "(1,5),(2,4)" or "1 5 2 4".
std::vector<cyclat::DescentLabel> ParseChain(const std::string& text) {
  std::vector<int> numbers;
  for (std::size_t p = 0; p < text.size();) {
    if (std::isdigit(static_cast<unsigned char>(text[p]))) {
      std::size_t end = p;
      while (end < text.size() &&
             std::isdigit(static_cast<unsigned char>(text[end]))) {
        ++end;
      }
      numbers.push_back(std::stoi(text.substr(p, end - p)));
      p = end;
    } else if (std::string_view("(), ").find(text[p]) != std::string_view::npos) {
      ++p;
    } else {
      throw cyclat::Error(cyclat::ErrorCode::kParseError,
                          "unexpected '" + std::string(1, text[p]) +
                              "' at position " + std::to_string(p) +
                              " of chain");
    }
  }
  if (numbers.size() % 2 != 0) {
    throw cyclat::Error(cyclat::ErrorCode::kParseError,
                        "chain labels come in pairs (r,s)");
  }
  std::vector<cyclat::DescentLabel> chain;
  for (std::size_t p = 0; p < numbers.size(); p += 2) {
    chain.push_back({numbers[p], numbers[p + 1]});
  }
  return chain;
}

int Convert(const std::string& input, const std::string& as,
            const std::string& to, bool json) {
  const auto element = ReadElement(input, as);
  if (auto target = FormFlag(to)) {
    std::cout << cyclat::FormatElement(element.sigma, *target, json) << "\n";
    return 0;
  }
  if (json) {
    nlohmann::ordered_json out;
    for (Form f : {Form::kCycle, Form::kVector, Form::kWindow}) {
      out[std::string(cyclat::FormName(f))] =
          nlohmann::json::parse(cyclat::FormatElement(element.sigma, f, true));
    }
    std::cout << out.dump() << "\n";
    return 0;
  }
  for (Form f : {Form::kCycle, Form::kVector, Form::kWindow}) {
    std::cout << cyclat::FormName(f) << " "
              << cyclat::FormatElement(element.sigma, f, false) << "\n";
  }
  return 0;
}

int Poset(int n, const std::string& format, const std::string& out_path,
          int workers) {
  cyclat::BuildOptions options;
  options.workers = workers;
  const auto diagram = cyclat::Build(n, options);
  const std::string text = format == "json" ? cyclat::DiagramToJson(diagram)
                                            : cyclat::DiagramToDot(diagram);
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
    return 0;
  }
  std::ofstream file(out_path, std::ios::binary);
  if (!file) {
    std::cerr << "cyclat: cannot write " << out_path << "\n";
    return kExitUsage;
  }
  file << text;
  return 0;
}

int LatticeOp(const std::string& op, const std::string& x_text,
              const std::string& y_text, const std::string& as, bool json) {
  const auto x = ReadElement(x_text, as);
  const auto y = ReadElement(y_text, as);
  if (x.sigma.n() != y.sigma.n()) {
    throw cyclat::Error(cyclat::ErrorCode::kShapeMismatch,
                        "elements of orders " + std::to_string(x.sigma.n()) +
                            " and " + std::to_string(y.sigma.n()));
  }
  const auto u = cyclat::ToVector(x.sigma);
  const auto v = cyclat::ToVector(y.sigma);
  const auto result =
      cyclat::ToCycle(op == "join" ? cyclat::Join(u, v) : cyclat::Meet(u, v));
  std::cout << cyclat::FormatElement(result, x.form, json) << "\n";
  return 0;
}

int Check(const std::string& name, int n, bool json,
          const cyclat::CheckOptions& options) {
  std::vector<cyclat::CheckReport> reports;
  if (name == "all") {
    reports = cyclat::RunAllChecks(n, options);
  } else {
    reports.push_back(cyclat::RunCheck(name, n, options));
  }
  bool pass = true;
  for (const auto& report : reports) {
    pass = pass && report.pass;
    std::cout << (json ? report.ToJson() : report.ToText()) << "\n";
  }
  return pass ? 0 : kExitCheckFailed;
}

int Rank(const std::string& input, const std::string& as, bool json) {
  const auto element = ReadElement(input, as);
  const auto rank = cyclat::RankN(element.sigma);
  if (json) {
    nlohmann::ordered_json out;
    out["cycle"] = element.sigma.ToString();
    out["rank"] = rank;
    out["max_rank"] = cyclat::TopRank(element.sigma.n());
    std::cout << out.dump() << "\n";
  } else {
    std::cout << rank << "\n";
  }
  return 0;
}

int Covers(const std::string& input, const std::string& as, bool down,
           bool json) {
  const auto element = ReadElement(input, as);
  const auto covers = down ? cyclat::CoversDown(element.sigma)
                           : cyclat::CoversUp(element.sigma);
  nlohmann::json out = nlohmann::json::array();
  for (const auto& c : covers) {
    const auto target = cyclat::FormatElement(c.target, element.form, false);
    if (json) {
      out.push_back({{"label", {c.label.r, c.label.s}}, {"target", target}});
    } else {
      std::cout << c.label.ToString() << " " << target << "\n";
    }
  }
  if (json) std::cout << out.dump() << "\n";
  return 0;
}

int Fc(int n, bool json) {
  const auto fc = cyclat::TopWindow(n);
  std::cout << (json ? cyclat::WindowToJson(fc) : fc.ToString()) << "\n";
  return 0;
}

int Alpha(const std::string& from_text, const std::string& chain_text,
          int maximal, const std::string& as, std::uint64_t seed, bool json) {
  std::optional<Element> from;
  std::vector<cyclat::DescentLabel> chain;
  if (maximal > 0) {
    const auto diagram = cyclat::Build(maximal);
    std::mt19937_64 rng(seed);
    from = Element{diagram.node(diagram.bottom()), Form::kCycle};
    chain = cyclat::RandomChain(diagram, diagram.bottom(), diagram.top(), rng);
  } else {
    if (from_text.empty()) {
      throw cyclat::Error(cyclat::ErrorCode::kParseError,
                          "alpha needs --from with --chain, or --maximal");
    }
    from = ReadElement(from_text, as);
    chain = ParseChain(chain_text);
  }
  const auto pc = cyclat::ComputePathConjugator(from->sigma, chain);
  if (json) {
    nlohmann::ordered_json out;
    out["alpha"] = pc.alpha.ToString();
    out["from"] = from->sigma.ToString();
    out["target"] = pc.target.ToString();
    out["steps"] = chain.size();
    std::cout << out.dump() << "\n";
  } else {
    std::cout << pc.alpha.ToString() << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Circular permutations, admitted vectors and affine windows"};
  app.require_subcommand(1);
  bool json = false;
  std::string as;
  app.add_flag("--json", json, "Machine-readable output");

  auto* convert = app.add_subcommand("convert", "Show an element in another form");
  std::string input, to;
  convert->add_option("input", input, "Cycle, vector or window")->required();
  convert->add_option("--as", as, "Input form: cycle|vector|window");
  convert->add_option("--to", to, "Output form: cycle|vector|window");
  convert->add_flag("--json", json, "JSON output");

  auto* poset = app.add_subcommand("poset", "Export the Hasse diagram of CP(n)");
  int n = 0;
  std::string format = "dot", out_path;
  int workers = 1;
  poset->add_option("n", n, "Order")->required();
  poset->add_option("--format", format, "dot|json")
      ->check(CLI::IsMember({"dot", "json"}));
  poset->add_option("--out", out_path, "Output file (default stdout)");
  poset->add_option("--workers", workers, "Build threads")
      ->check(CLI::Range(1, 256));

  auto* lattice = app.add_subcommand("lattice", "Join or meet of two elements");
  std::string op, x_text, y_text;
  lattice->add_option("op", op, "join|meet")
      ->required()
      ->check(CLI::IsMember({"join", "meet"}));
  lattice->add_option("x", x_text)->required();
  lattice->add_option("y", y_text)->required();
  lattice->add_option("--as", as, "Input form: cycle|vector|window");
  lattice->add_flag("--json", json, "JSON output");

  auto* check = app.add_subcommand("check", "Run a verification (or all)");
  std::string check_name;
  cyclat::CheckOptions check_options;
  bool list = false;
  check->add_option("name", check_name, "Check name or 'all'");
  check->add_option("n", n, "Order");
  check->add_flag("--list", list, "List checks and their ranges");
  check->add_flag("--json", json, "One JSON report per line");
  check->add_option("--seed", check_options.seed, "Seed for sampled checks");
  check->add_option("--samples", check_options.samples,
                    "Sample size where a check samples");
  check->add_option("--workers", check_options.workers, "Build threads")
      ->check(CLI::Range(1, 256));

  auto* rank = app.add_subcommand("rank", "Rank N of an element");
  rank->add_option("input", input)->required();
  rank->add_option("--as", as, "Input form: cycle|vector|window");
  rank->add_flag("--json", json, "JSON output");

  auto* covers = app.add_subcommand("covers", "Covers of an element");
  bool down = false;
  covers->add_option("input", input)->required();
  covers->add_option("--as", as, "Input form: cycle|vector|window");
  covers->add_flag("--down", down, "Elements covered instead");
  covers->add_flag("--json", json, "JSON output");

  auto* fc = app.add_subcommand("fc", "Window of the top affine permutation");
  fc->add_option("n", n, "Order")->required()->check(CLI::Range(2, 1000));
  fc->add_flag("--json", json, "JSON output");

  auto* alpha = app.add_subcommand("alpha", "Path conjugator of an upward chain");
  std::string from_text, chain_text;
  int maximal = 0;
  std::uint64_t seed = 1;
  alpha->add_option("--from", from_text, "Start element");
  alpha->add_option("--chain", chain_text, "Labels, e.g. \"(1,5)(2,4)\"");
  alpha->add_option("--maximal", maximal, "Random maximal chain of CP(n)");
  alpha->add_option("--seed", seed, "Seed for --maximal");
  alpha->add_option("--as", as, "Input form: cycle|vector|window");
  alpha->add_flag("--json", json, "JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*convert) return Convert(input, as, to, json);
    if (*poset) return Poset(n, format, out_path, workers);
    if (*lattice) return LatticeOp(op, x_text, y_text, as, json);
    if (*check) {
      if (list) {
        for (const auto& info : cyclat::Checks()) {
          const auto [lo, hi] = cyclat::CheckRange(info);
          std::cout << info.name << " " << lo << ".." << hi << "  "
                    << info.summary << "\n";
        }
        return 0;
      }
      if (check_name.empty() || n == 0) {
        std::cerr << "cyclat: check needs a name and n\n";
        return kExitUsage;
      }
      return Check(check_name, n, json, check_options);
    }
    if (*rank) return Rank(input, as, json);
    if (*covers) return Covers(input, as, down, json);
    if (*fc) return Fc(n, json);
    if (*alpha) return Alpha(from_text, chain_text, maximal, as, seed, json);
  } catch (const cyclat::Error& e) {
    std::cerr << "cyclat: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
