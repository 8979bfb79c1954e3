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

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cyclat/admitted.h"
#include "cyclat/affine.h"
#include "cyclat/checks.h"
#include "cyclat/error.h"
#include "cyclat/io.h"
#include "cyclat/perm_core.h"
#include "cyclat/poset.h"

namespace py = pybind11;

namespace {

std::pair<int, int> LabelPair(const cyclat::DescentLabel& label) {
  return {label.r, label.s};
}

std::vector<cyclat::DescentLabel> Labels(
    const std::vector<std::pair<int, int>>& pairs) {
  std::vector<cyclat::DescentLabel> out;
  for (const auto& [r, s] : pairs) out.push_back({r, s});
  return out;
}

std::vector<std::pair<std::pair<int, int>, cyclat::CircularPermutation>>
CoverList(const std::vector<cyclat::Cover>& covers) {
  std::vector<std::pair<std::pair<int, int>, cyclat::CircularPermutation>> out;
  for (const auto& c : covers) out.emplace_back(LabelPair(c.label), c.target);
  return out;
}

}  // namespace

PYBIND11_MODULE(_cyclat, m) {
  m.doc() = "Circular permutations, admitted vectors and affine windows";

  py::register_exception<cyclat::Error>(m, "CyclatError", PyExc_ValueError);

  py::class_<cyclat::CircularPermutation>(m, "Cycle")
      .def(py::init([](const std::string& text) {
             return cyclat::CircularPermutation::Parse(text);
           }),
           py::arg("text"))
      .def_static("from_letters",
                  [](std::vector<int> letters) {
                    return cyclat::CircularPermutation::FromLetters(
                        std::move(letters));
                  })
      .def_static("bottom", &cyclat::CircularPermutation::Bottom)
      .def_static("top", &cyclat::CircularPermutation::Top)
      .def_property_readonly("n", &cyclat::CircularPermutation::n)
      .def_property_readonly("letters",
                             [](const cyclat::CircularPermutation& c) {
                               const auto l = c.canon().letters();
                               return std::vector<int>(l.begin(), l.end());
                             })
      .def("rank", [](const cyclat::CircularPermutation& c) {
        return cyclat::RankN(c);
      })
      .def("descents",
           [](const cyclat::CircularPermutation& c) {
             std::vector<std::pair<int, int>> out;
             for (const auto& l : cyclat::LargeCircularDescents(c)) {
               out.push_back(LabelPair(l));
             }
             return out;
           })
      .def("covers_up",
           [](const cyclat::CircularPermutation& c) {
             return CoverList(cyclat::CoversUp(c));
           })
      .def("covers_down",
           [](const cyclat::CircularPermutation& c) {
             return CoverList(cyclat::CoversDown(c));
           })
      .def("to_vector", &cyclat::ToVector)
      .def("to_window",
           [](const cyclat::CircularPermutation& c) {
             return cyclat::WindowOfVector(cyclat::ToVector(c));
           })
      .def("__str__", &cyclat::CircularPermutation::ToString)
      .def("__repr__",
           [](const cyclat::CircularPermutation& c) {
             return "Cycle('" + c.ToString() + "')";
           })
      .def("__hash__",
           [](const cyclat::CircularPermutation& c) {
             return std::hash<cyclat::CircularPermutation>{}(c);
           })
      .def(py::self == py::self)
      .def(py::self != py::self);

  py::class_<cyclat::AdmittedVector>(m, "Vector")
      .def(py::init([](int n, const std::vector<std::vector<int>>& rows) {
             return cyclat::AdmittedVector::Validate(
                 cyclat::TriangularVector::FromRows(n, rows));
           }),
           py::arg("n"), py::arg("rows"))
      .def_static("parse", &cyclat::ParseVector)
      .def_property_readonly("n", &cyclat::AdmittedVector::n)
      .def("at", &cyclat::AdmittedVector::at)
      .def("rows",
           [](const cyclat::AdmittedVector& v) { return v.raw().Rows(); })
      .def("rank", &cyclat::AdmittedVector::Rank)
      .def("to_cycle", &cyclat::ToCycle)
      .def("to_window", &cyclat::WindowOfVector)
      .def("__le__", [](const cyclat::AdmittedVector& u,
                        const cyclat::AdmittedVector& v) {
        return cyclat::Leq(u, v);
      })
      .def("__str__", &cyclat::AdmittedVector::ToString)
      .def("__repr__",
           [](const cyclat::AdmittedVector& v) {
             return "Vector.parse('" + v.ToString() + "')";
           })
      .def(py::self == py::self);

  py::class_<cyclat::AffineWindow>(m, "Window")
      .def(py::init([](std::vector<std::int64_t> entries) {
             return cyclat::AffineWindow(std::move(entries));
           }),
           py::arg("entries"))
      .def_static("parse", &cyclat::ParseWindow)
      .def_static("top", &cyclat::TopWindow)
      .def_property_readonly("n", &cyclat::AffineWindow::n)
      .def_property_readonly("entries",
                             [](const cyclat::AffineWindow& f) {
                               const auto e = f.entries();
                               return std::vector<std::int64_t>(e.begin(),
                                                                e.end());
                             })
      .def("apply", &cyclat::AffineWindow::Apply)
      .def("compose", &cyclat::AffineWindow::Compose)
      .def("inverse", &cyclat::AffineWindow::Inverse)
      .def("length", [](const cyclat::AffineWindow& f) {
        return cyclat::Length(f);
      })
      .def("in_interval", [](const cyclat::AffineWindow& f) {
        return cyclat::InInterval(f);
      })
      .def("to_vector", &cyclat::VectorOfWindow)
      .def("project", &cyclat::Project)
      .def("__str__", &cyclat::AffineWindow::ToString)
      .def("__repr__",
           [](const cyclat::AffineWindow& f) {
             return "Window.parse('" + f.ToString() + "')";
           })
      .def(py::self == py::self);

  py::class_<cyclat::HasseDiagram>(m, "Diagram")
      .def_property_readonly("n", &cyclat::HasseDiagram::n)
      .def("__len__", &cyclat::HasseDiagram::size)
      .def("node", &cyclat::HasseDiagram::node)
      .def("rank", &cyclat::HasseDiagram::rank)
      .def("index", py::overload_cast<const cyclat::CircularPermutation&>(
                        &cyclat::HasseDiagram::IndexOf, py::const_))
      .def("edges",
           [](const cyclat::HasseDiagram& d) {
             std::vector<std::tuple<int, int, std::pair<int, int>>> out;
             for (const auto& e : d.edges()) {
               out.emplace_back(e.lower, e.upper, LabelPair(e.label));
             }
             return out;
           })
      .def("leq", &cyclat::HasseDiagram::Leq)
      .def("to_dot", &cyclat::DiagramToDot)
      .def("to_json", &cyclat::DiagramToJson);

  m.def("build", [](int n, int workers) {
    cyclat::BuildOptions options;
    options.workers = workers;
    return cyclat::Build(n, options);
  }, py::arg("n"), py::arg("workers") = 1);

  m.def("parse", [](const std::string& text) {
    return cyclat::ParseElement(text);
  }, "Any incarnation, mapped to its cycle");
  m.def("join", [](const cyclat::AdmittedVector& u,
                   const cyclat::AdmittedVector& v) { return cyclat::Join(u, v); });
  m.def("meet", [](const cyclat::AdmittedVector& u,
                   const cyclat::AdmittedVector& v) { return cyclat::Meet(u, v); });
  m.def("join", [](const cyclat::CircularPermutation& a,
                   const cyclat::CircularPermutation& b) {
    return cyclat::ToCycle(cyclat::Join(cyclat::ToVector(a), cyclat::ToVector(b)));
  });
  m.def("meet", [](const cyclat::CircularPermutation& a,
                   const cyclat::CircularPermutation& b) {
    return cyclat::ToCycle(cyclat::Meet(cyclat::ToVector(a), cyclat::ToVector(b)));
  });
  m.def("compare", [](const cyclat::CircularPermutation& a,
                      const cyclat::CircularPermutation& b) {
    return std::string(cyclat::OrderingName(cyclat::Compare(a, b)));
  });
  m.def("eulerian", &cyclat::Eulerian, py::arg("n"), py::arg("k"));
  m.def("path_conjugator",
        [](const cyclat::CircularPermutation& from,
           const std::vector<std::pair<int, int>>& chain) {
          const auto labels = Labels(chain);
          const auto pc = cyclat::ComputePathConjugator(from, labels);
          const auto l = pc.alpha.letters();
          return std::make_pair(std::vector<int>(l.begin(), l.end()), pc.target);
        },
        py::arg("start"), py::arg("chain"));

  m.def("check", [](const std::string& name, int n) {
    const auto report = cyclat::RunCheck(name, n);
    py::dict out;
    out["check"] = report.check;
    out["n"] = report.n;
    out["pass"] = report.pass;
    out["witness"] = report.witness ? py::cast(*report.witness) : py::none();
    out["text"] = report.text;
    out["elapsed_seconds"] = report.elapsed_seconds;
    return out;
  }, py::arg("name"), py::arg("n"));
  m.def("check_names", [] {
    std::vector<std::string> names;
    for (const auto& info : cyclat::Checks()) names.push_back(info.name);
    return names;
  });
}
