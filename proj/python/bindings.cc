// Copyright 2026 The entstruct Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Thin pybind11 layer. Structured results cross the boundary as JSON text and are decoded by the
// Python package, so the document schema stays defined in one place.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "entstruct/clustering.h"
#include "entstruct/diagram_io.h"
#include "entstruct/ensembles.h"
#include "entstruct/entropy.h"
#include "entstruct/metrics.h"
#include "entstruct/states.h"
#include "entstruct/tableau.h"

namespace py = pybind11;
using namespace entstruct;

namespace {

QubitSet to_set(const std::vector<uint32_t> &qubits) {
    return QubitSet(qubits);
}

Gate parse_gate(const std::string &name) {
    if (name == "H") return Gate::H;
    if (name == "S") return Gate::S;
    if (name == "CZ") return Gate::CZ;
    if (name == "CNOT") return Gate::CNOT;
    if (name == "SWAP") return Gate::SWAP;
    throw std::invalid_argument("unknown gate '" + name + "' (expected H, S, CZ, CNOT or SWAP)");
}

std::string diagram_json(const Diagram &d, bool metrics) {
    DiagramDocument doc{d, std::nullopt};
    if (metrics) {
        doc.metrics = compute_metrics(d);
    }
    return format_document(doc);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Entanglement-structure diagrams of stabilizer states";

    py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<DocumentError>(m, "DocumentError", PyExc_ValueError);

    py::class_<StabilizerTableau>(m, "Tableau")
        .def(py::init<size_t>(), py::arg("num_qubits"), "The all-zero product state on num_qubits qubits.")
        .def_static("parse", [](const std::string &text) { return parse_tableau(text); }, py::arg("text"))
        .def_static(
            "from_generators",
            [](const std::vector<std::string> &gens, size_t n) {
                std::vector<PauliString> ps;
                for (const std::string &g : gens) {
                    ps.push_back(parse_pauli(g, n));
                }
                return StabilizerTableau::from_generators(ps);
            },
            py::arg("generators"), py::arg("num_qubits"))
        .def_property_readonly("num_qubits", &StabilizerTableau::num_qubits)
        .def("generators",
             [](const StabilizerTableau &t) {
                 std::vector<std::string> out;
                 for (const PauliString &p : t.generators()) {
                     out.push_back(p.str_sparse());
                 }
                 return out;
             })
        .def(
            "apply",
            [](StabilizerTableau &t, const std::string &gate, const std::vector<size_t> &qubits) {
                t.apply(parse_gate(gate), qubits);
            },
            py::arg("gate"), py::arg("qubits"))
        .def(
            "measure",
            [](StabilizerTableau &t, const std::string &pauli, uint64_t seed) {
                Rng rng(seed);
                return measure_pauli_in_place(t, parse_pauli(pauli, t.num_qubits()), rng).outcome;
            },
            py::arg("pauli"), py::arg("seed"), "Measures the Pauli observable in place and returns +1 or -1.")
        .def("__str__", &format_tableau)
        .def("__eq__", [](const StabilizerTableau &a, const StabilizerTableau &b) { return a == b; })
        .def("__repr__",
             [](const StabilizerTableau &t) { return "<Tableau n=" + std::to_string(t.num_qubits()) + ">"; });

    m.def(
        "named_state",
        [](const std::string &name, std::optional<size_t> n, const std::string &boundary, bool complete) {
            if (boundary != "pbc" && boundary != "obc") {
                throw std::invalid_argument("boundary must be 'pbc' or 'obc'");
            }
            NamedState s = make_named_state(name, n, boundary == "obc" ? Boundary::Open : Boundary::Periodic, complete);
            if (s.defect) {
                throw ValidationError(*s.defect);
            }
            return StabilizerTableau::from_generators(s.generators);
        },
        py::arg("name"), py::arg("n") = py::none(), py::arg("boundary") = "pbc", py::arg("complete") = false);

    m.def(
        "entropy_bits", [](const StabilizerTableau &t, const std::vector<uint32_t> &a) { return entropy_bits(t, to_set(a)); },
        py::arg("tableau"), py::arg("qubits"));
    m.def(
        "total_correlations",
        [](const StabilizerTableau &t, const std::vector<std::vector<uint32_t>> &groups) {
            std::vector<QubitSet> sets;
            for (const auto &g : groups) {
                sets.push_back(to_set(g));
            }
            return total_correlations(t, sets);
        },
        py::arg("tableau"), py::arg("groups"));

    m.def(
        "diagram_json",
        [](const StabilizerTableau &t, bool metrics, bool prune, unsigned threads) {
            ClusteringOptions options;
            options.prune = prune;
            options.threads = threads;
            Diagram d;
            {
                py::gil_scoped_release release;
                d = build_diagram(t, options);
            }
            return diagram_json(d, metrics);
        },
        py::arg("tableau"), py::arg("metrics") = true, py::arg("prune") = false, py::arg("threads") = 1);
    m.def(
        "diagram_dot", [](const StabilizerTableau &t) { return format_dot(build_diagram(t)); }, py::arg("tableau"));
    m.def(
        "diagram_text", [](const StabilizerTableau &t) { return format_text(build_diagram(t)); }, py::arg("tableau"));
    m.def(
        "entropy_upper_bound",
        [](const StabilizerTableau &t, const std::vector<uint32_t> &a) {
            return entropy_upper_bound(build_diagram(t), to_set(a));
        },
        py::arg("tableau"), py::arg("qubits"));

    m.def(
        "run_ensemble",
        [](const std::string &kind, size_t L, size_t samples, uint64_t seed, std::optional<size_t> layers,
           unsigned threads, bool allow_large) {
            std::optional<EnsembleKind> k = parse_kind(kind);
            if (!k) {
                throw std::invalid_argument("kind must be 'unitary' or 'measurement'");
            }
            EnsembleSpec spec;
            spec.kind = *k;
            spec.L = L;
            spec.samples = samples;
            spec.seed = seed;
            spec.layers = layers;
            spec.threads = threads;
            spec.allow_large = allow_large;
            EnsembleStats stats;
            {
                py::gil_scoped_release release;
                stats = run_ensemble(spec);
            }
            std::string csv = records_csv_header() + "\n";
            for (const EnsembleRecord &r : stats.records) {
                csv += record_csv_row(r) + "\n";
            }
            return py::make_tuple(to_json(stats).dump(), csv);
        },
        py::arg("kind"), py::arg("L"), py::arg("samples") = 100, py::arg("seed") = 0, py::arg("layers") = py::none(),
        py::arg("threads") = 1, py::arg("allow_large") = false);
}
