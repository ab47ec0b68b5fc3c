#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <tuple>
#include <vector>

#include "mdecomp/connectivity.hpp"
#include "mdecomp/decomposition.hpp"
#include "mdecomp/error.hpp"
#include "mdecomp/localization.hpp"
#include "mdecomp/matroid.hpp"
#include "mdecomp/separation_calculus.hpp"
#include "mdecomp/spec_io.hpp"
#include "mdecomp/verification.hpp"

namespace py = pybind11;
using namespace mdecomp;

namespace {

using Labels = std::vector<std::string>;

Validation validation_of(const std::string& name) {
  if (name == "none") return Validation::kNone;
  if (name == "antichain") return Validation::kAntichain;
  if (name == "full") return Validation::kFull;
  fail(ErrorCode::kInvalidParams, "validation must be none, antichain or full");
}

py::list separations_list(const Matroid& m, const std::vector<Separation>& seps) {
  py::list out;
  for (const Separation& s : seps) {
    out.append(py::make_tuple(m.labels_of(s.side_a), m.labels_of(s.side_b), s.order));
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, mod) {
  mod.doc() = "Canonical 2-separation tree decompositions of finite matroids";

  // The message starts with the error code name.
  py::register_exception<Error>(mod, "MatroidError", PyExc_ValueError);

  py::class_<Matroid>(mod, "Matroid")
      .def_static(
          "from_circuits",
          [](Labels ground, const std::vector<Labels>& circuits, const std::string& validate) {
            return Matroid::from_circuit_labels(std::move(ground), circuits,
                                                validation_of(validate));
          },
          py::arg("ground"), py::arg("circuits"), py::arg("validate") = "full")
      .def_static(
          "from_json",
          [](const std::string& text, const std::string& validate) {
            return parse_matroid_spec(text, validation_of(validate));
          },
          py::arg("spec"), py::arg("validate") = "full")
      .def_property_readonly("labels", &Matroid::labels)
      .def_property_readonly("circuits", [](const Matroid& m) { return circuit_labels(m); })
      .def("__len__", &Matroid::size)
      .def("rank", [](const Matroid& m) { return m.rank(); })
      .def("rank_of", [](const Matroid& m, const Labels& s) { return m.rank(m.subset(s)); })
      .def("is_independent",
           [](const Matroid& m, const Labels& s) { return m.is_independent(m.subset(s)); })
      .def("is_circuit", [](const Matroid& m, const Labels& s) { return m.is_circuit(m.subset(s)); })
      .def("is_connected", [](const Matroid& m) { return is_connected(m); })
      .def("is_3_connected", [](const Matroid& m) { return is_n_connected(m, 3); })
      .def("dual", [](const Matroid& m) { return dual(m); })
      .def("same_as", [](const Matroid& a, const Matroid& b) { return same_matroid(a, b); })
      .def("__repr__", [](const Matroid& m) {
        return "<Matroid on " + std::to_string(m.size()) + " elements, rank " +
               std::to_string(m.rank()) + ">";
      });

  mod.def("uniform", &uniform, py::arg("r"), py::arg("n"));
  mod.def(
      "graphic",
      [](const Labels& vertices, const std::vector<std::pair<std::string, std::string>>& edges) {
        return graphic(vertices, edges);
      },
      py::arg("vertices"), py::arg("edges"));
  mod.def(
      "gf2", [](const std::vector<std::vector<int>>& columns) { return linear_gf2(columns); },
      py::arg("columns"));

  mod.def("enumeration_cap", &enumeration_cap);
  mod.def("set_enumeration_cap", &set_enumeration_cap, py::arg("cap"));

  mod.def(
      "phi", [](const Matroid& m, const Labels& x) { return phi(m, m.subset(x)); }, py::arg("m"),
      py::arg("x"));
  mod.def(
      "separations",
      [](const Matroid& m, std::size_t k) { return separations_list(m, enumerate_separations(m, k)); },
      py::arg("m"), py::arg("k") = 2);
  mod.def(
      "good_separations",
      [](const Matroid& m) { return separations_list(m, good_2separations(m)); }, py::arg("m"));

  mod.def(
      "two_sum",
      [](const Matroid& a, const Matroid& b, const std::string& shared) {
        return two_sum(a, b, shared);
      },
      py::arg("first"), py::arg("second"), py::arg("shared"));
  mod.def(
      "split_along",
      [](const Matroid& m, const Labels& side) {
        const ElementSet a = m.subset(side);
        const SplitResult r = split_along(m, {a, a.complement_in(m.ground()), 2});
        return std::make_tuple(r.first, r.second, r.shared);
      },
      py::arg("m"), py::arg("side"));
  mod.def(
      "localize",
      [](const Matroid& m, const std::vector<Labels>& family) {
        std::vector<ElementSet> members;
        for (const Labels& x : family) members.push_back(m.subset(x));
        return localize(m, std::move(members)).local();
      },
      py::arg("m"), py::arg("family"));

  mod.def(
      "decompose_json",
      [](const Matroid& m) { return to_json(make_report(m, build_tree(m))).dump(); },
      py::arg("m"));
  mod.def(
      "decompose_dot", [](const Matroid& m) { return to_dot(make_report(m, build_tree(m))); },
      py::arg("m"));
  mod.def(
      "verify",
      [](const Matroid& m, const std::string& suite, std::uint64_t seed) {
        Report r;
        if (suite == "lemmas" || suite == "all") r.merge(run_lemma_suite(m, seed));
        if (suite == "duality" || suite == "all") r.merge(run_duality_suite(m, seed));
        return std::make_pair(r.ok(), r.summary());
      },
      py::arg("m"), py::arg("suite") = "all", py::arg("seed") = 0);
}
