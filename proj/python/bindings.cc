// Copyright 2026 The Arrival Authors
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

#include <pybind11/pybind11.h>
#include <pybind11/operators.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "arrival/core.h"
#include "arrival/decompose.h"
#include "arrival/errors.h"
#include "arrival/flows.h"
#include "arrival/generate.h"
#include "arrival/report.h"
#include "arrival/simulate.h"
#include "arrival/solver.h"

namespace py = pybind11;

namespace {

using namespace arrival;

// Big integers cross the boundary as decimal text.
py::int_ to_py(const BigInt& x) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(x.str().c_str(), nullptr, 10));
}

BigInt from_py(const py::handle& obj) {
  return BigInt(py::str(py::int_(py::reinterpret_borrow<py::object>(obj))).cast<std::string>());
}

py::list to_py(std::span<const BigInt> xs) {
  py::list out;
  for (const auto& x : xs) out.append(to_py(x));
  return out;
}

std::vector<BigInt> from_py_list(const py::sequence& seq) {
  std::vector<BigInt> out;
  for (const auto& item : seq) out.push_back(from_py(item));
  return out;
}

py::object token(VertexId v) {
  if (v.is_proper()) return py::int_(v.index());
  return py::str(to_token(v));
}

VertexId vertex_from_py(const py::handle& obj) {
  if (py::isinstance<py::str>(obj)) return parse_vertex_token(obj.cast<std::string>());
  return VertexId::proper(obj.cast<std::int32_t>());
}

ArrivalInstance make_instance(const py::handle& origin, const py::sequence& even,
                              const py::sequence& odd) {
  ArrivalInstance instance;
  instance.origin = vertex_from_py(origin);
  for (const auto& v : even) instance.succ_even.push_back(vertex_from_py(v));
  for (const auto& v : odd) instance.succ_odd.push_back(vertex_from_py(v));
  validate(instance);
  return instance;
}

py::list edge_list(const ArrivalInstance& instance) {
  const SwitchGraph graph(instance);
  py::list out;
  for (const auto& e : graph.edges()) {
    out.append(py::make_tuple(token(e.tail), to_string(e.slot), token(e.head)));
  }
  return out;
}

py::dict run(const ArrivalInstance& instance) {
  const auto result = run_procedure(SwitchGraph(instance));
  py::dict out;
  out["destination"] = to_token(result.destination);
  out["profile"] = to_py(result.profile.values());
  out["visits"] = result.visits;
  out["proper_traversals"] = result.proper_traversals;
  return out;
}

py::dict multi(const ArrivalInstance& instance, const std::vector<std::int32_t>& set,
               const py::sequence& weights, const std::string& scheduler) {
  const auto w = from_py_list(weights);
  const auto result = multi_run(SwitchGraph(instance), set, w, parse_scheduler(scheduler));
  py::dict out;
  out["inflows"] = to_py(result.inflows);
  out["arrivals_d"] = to_py(result.arrivals_d);
  out["arrivals_dbar"] = to_py(result.arrivals_dbar);
  out["profile"] = to_py(result.profile.values());
  out["iterations"] = result.iterations;
  return out;
}

py::tuple check_flow(const ArrivalInstance& instance, const py::sequence& flow,
                     const std::optional<std::vector<std::int32_t>>& set,
                     const std::optional<py::sequence>& outflows) {
  const SwitchGraph graph(instance);
  const EdgeFlow x(from_py_list(flow));
  FlowVerdict verdict;
  if (set) {
    const auto w = outflows ? from_py_list(*outflows) : std::vector<BigInt>{};
    verdict = check_candidate_flow(graph, *set, w, x);
  } else {
    verdict = check_switching_flow(graph, x);
  }
  py::object destination = py::none();
  if (const auto d = verdict.destination()) destination = py::str(to_token(*d));
  return py::make_tuple(verdict.valid(), destination, verdict.reason);
}

// Returns (summary json, certificate).
py::tuple decide(const ArrivalInstance& instance, const std::string& method,
                 const std::optional<std::string>& phi, int k_max, const std::string& tarski) {
  const SwitchGraph graph(instance);
  if (!is_terminating(graph)) throw ValidationError("instance is not terminating");
  SubexpOptions subexp;
  if (phi) subexp.phi = Rational::parse(*phi);
  subexp.tarski = parse_tarski_method(tarski);
  Decision d;
  {
    py::gil_scoped_release release;
    switch (parse_method(method)) {
      case Method::kSimulation:
        d = decide_by_simulation(graph);
        break;
      case Method::kSubexponential:
        d = decide_subexponential(graph, subexp);
        break;
      case Method::kFvs: {
        FvsOptions fvs;
        fvs.k_max = k_max;
        fvs.tarski = subexp.tarski;
        d = decide_fvs(graph, fvs);
        break;
      }
    }
  }
  return py::make_tuple(to_json(d), to_py(d.certificate.values()));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "ARRIVAL simulation, deciders and certificate checks";

  auto base = py::register_exception<ArrivalError>(m, "ArrivalError", PyExc_RuntimeError);
  py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
  py::register_exception<CertificateError>(m, "CertificateError", base.ptr());
  py::register_exception<FvsRefusal>(m, "FvsRefusal", base.ptr());
  py::register_exception<DisagreementError>(m, "DisagreementError", base.ptr());

  py::class_<ArrivalInstance>(m, "Instance")
      .def(py::init(&make_instance), py::arg("origin"), py::arg("even"), py::arg("odd"))
      .def_static(
          "parse", [](const std::string& text) { return parse_instance(text); }, py::arg("text"))
      .def("serialize", &serialize_instance)
      .def_property_readonly("n", &ArrivalInstance::num_vertices)
      .def_property_readonly("origin", [](const ArrivalInstance& a) { return token(a.origin); })
      .def_property_readonly("even",
                             [](const ArrivalInstance& a) {
                               py::list out;
                               for (const auto v : a.succ_even) out.append(token(v));
                               return out;
                             })
      .def_property_readonly("odd",
                             [](const ArrivalInstance& a) {
                               py::list out;
                               for (const auto v : a.succ_odd) out.append(token(v));
                               return out;
                             })
      .def("edges", &edge_list)
      .def("is_terminating",
           [](const ArrivalInstance& a) { return is_terminating(a); })
      .def(py::self == py::self)
      .def("__repr__", [](const ArrivalInstance& a) {
        return "<Instance n=" + std::to_string(a.num_vertices()) + " origin=" +
               to_token(a.origin) + ">";
      });

  m.def(
      "generate",
      [](const std::string& family, std::int32_t n, std::uint64_t seed) {
        return generate({parse_family(family), n, seed});
      },
      py::arg("family"), py::arg("n"), py::arg("seed") = 0);
  m.def("run", &run, py::arg("instance"));
  m.def("multi_run", &multi, py::arg("instance"), py::arg("set"), py::arg("weights"),
        py::arg("scheduler") = "greedy");
  m.def("check_flow", &check_flow, py::arg("instance"), py::arg("flow"),
        py::arg("set") = std::nullopt, py::arg("outflows") = std::nullopt);
  m.def("_decide", &decide, py::arg("instance"), py::arg("method"), py::arg("phi"),
        py::arg("kmax"), py::arg("tarski"));
  m.def(
      "_phi_set",
      [](const ArrivalInstance& a, const std::optional<std::string>& phi) {
        const SwitchGraph graph(a);
        return to_json(compute_phi_set(
            graph, phi ? Rational::parse(*phi) : default_phi(graph.num_vertices())));
      },
      py::arg("instance"), py::arg("phi"));
  m.def(
      "_fvs",
      [](const ArrivalInstance& a, int k_max) -> std::optional<std::string> {
        const auto fvs = feedback_vertex_set(SwitchGraph(a), k_max);
        if (!fvs) return std::nullopt;
        return to_json(*fvs);
      },
      py::arg("instance"), py::arg("kmax"));
}
