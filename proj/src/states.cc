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

#include "entstruct/states.h"

#include <algorithm>
#include <stdexcept>

using namespace entstruct;

namespace {

StabilizerTableau from_strings(size_t n, const std::vector<std::string> &lines) {
    std::vector<PauliString> gens;
    for (const std::string &line : lines) {
        gens.push_back(parse_pauli(line, n));
    }
    return StabilizerTableau::from_generators(gens);
}

DiagramNode pair_cluster(uint32_t a, uint32_t b) {
    return DiagramNode::cluster(2, {DiagramNode::leaf(a), DiagramNode::leaf(b)});
}

}  // namespace

StabilizerTableau entstruct::product_state(size_t n) {
    return StabilizerTableau(n);
}

StabilizerTableau entstruct::ghz(size_t n) {
    if (n < 2) {
        throw std::invalid_argument("ghz needs n >= 2");
    }
    std::vector<PauliString> gens;
    for (size_t i = 0; i + 1 < n; i++) {
        PauliString p(n);
        p.set(i, 'Z');
        p.set(i + 1, 'Z');
        gens.push_back(p);
    }
    PauliString all_x(n);
    for (size_t i = 0; i < n; i++) {
        all_x.set(i, 'X');
    }
    gens.push_back(all_x);
    return StabilizerTableau::from_generators(gens);
}

StabilizerTableau entstruct::cluster1d(size_t n, Boundary boundary) {
    if (n < 3) {
        throw std::invalid_argument("cluster1d needs n >= 3");
    }
    std::vector<PauliString> gens;
    for (size_t j = 0; j < n; j++) {
        PauliString p(n);
        p.set(j, 'X');
        if (j > 0) {
            p.set(j - 1, 'Z');
        } else if (boundary == Boundary::Periodic) {
            p.set(n - 1, 'Z');
        }
        if (j + 1 < n) {
            p.set(j + 1, 'Z');
        } else if (boundary == Boundary::Periodic) {
            p.set(0, 'Z');
        }
        gens.push_back(p);
    }
    return StabilizerTableau::from_generators(gens);
}

StabilizerTableau entstruct::five_qubit_code_logical_x() {
    return from_strings(5, {"XZZXI", "IXZZX", "XIXZZ", "ZXIXZ", "XXXXX"});
}

StabilizerTableau entstruct::steane_code_logical_x() {
    return from_strings(7, {
                               "IIIXXXX",
                               "IXXIIXX",
                               "XIXIXIX",
                               "IIIZZZZ",
                               "IZZIIZZ",
                               "ZIZIZIZ",
                               "XXXXXXX",
                           });
}

StabilizerTableau entstruct::four_qubit_example() {
    return from_strings(4, {"Z1 Z2", "Z3 Z4", "-X1 X2 Z3", "-Z2 X3 X4"});
}

std::vector<PauliString> entstruct::ten_qubit_listed_generators() {
    std::vector<PauliString> gens;
    for (const char *s : {
             "Y2 Y3 Y4",
             "Y4 Y5 X6",
             "X1 Y2 Y5 X6",
             "X1 Y2 Y5 X6",
             "Y1 X2 Z3 Z5 Z6",
             "Y2 Y3 X5 Y6",
             "X7 X8 X9 X10",
             "Z7 Z9",
             "Z8 Z9",
             "Z8 Z10",
         }) {
        gens.push_back(parse_pauli(s, 10));
    }
    return gens;
}

StabilizerTableau entstruct::ten_qubit_example() {
    StabilizerTableau t = StabilizerTableau::from_generators_unchecked(ten_qubit_listed_generators());
    std::optional<std::string> err = t.validation_error();
    throw ValidationError("published ten-qubit generator list is not a valid tableau (generators 3 and 4 are both " +
                          t.generator(2).str_sparse() + "): " + err.value_or("unknown defect"));
}

Diagram entstruct::ten_qubit_target_diagram() {
    Diagram d;
    d.n = 10;
    DiagramNode left = DiagramNode::cluster(2, {pair_cluster(0, 2), DiagramNode::leaf(1)});
    DiagramNode right = DiagramNode::cluster(2, {DiagramNode::leaf(3), pair_cluster(4, 5)});
    DiagramNode big = DiagramNode::cluster(2, {left, right});
    big.decoupled = true;
    DiagramNode small = DiagramNode::cluster(
        2, {DiagramNode::leaf(6), DiagramNode::leaf(7), DiagramNode::leaf(8), DiagramNode::leaf(9)});
    small.decoupled = true;
    d.roots = {big, small};
    d.first_round_sets = {
        {QubitSet{0, 2}, 2},
        {QubitSet{4, 5}, 2},
        {QubitSet{6, 8}, 2},
        {QubitSet{6, 9}, 2},
        {QubitSet{7, 8}, 2},
        {QubitSet{7, 9}, 2},
        {QubitSet{8, 9}, 2},
        {QubitSet{6, 7}, 2},
    };
    std::sort(d.first_round_sets.begin(), d.first_round_sets.end(), [](const FirstRoundSet &a, const FirstRoundSet &b) {
        return a.qubits < b.qubits;
    });
    return d;
}

std::optional<StabilizerTableau> entstruct::complete_ten_qubit_example() {
    std::vector<PauliString> gens = ten_qubit_listed_generators();
    const Diagram target = ten_qubit_target_diagram();
    static constexpr char kLetters[] = {'I', 'X', 'Y', 'Z'};
    for (uint32_t code = 1; code < (1u << 12); code++) {
        PauliString p(10);
        for (size_t q = 0; q < 6; q++) {
            p.set(q, kLetters[(code >> (2 * q)) & 3]);
        }
        gens[3] = p;
        StabilizerTableau t = StabilizerTableau::from_generators_unchecked(gens);
        if (t.validation_error()) {
            continue;
        }
        Diagram d = build_diagram(t);
        // Only the tree of the target is fixed; first-round sets are not compared.
        if (d.roots == target.roots) {
            return t;
        }
    }
    return std::nullopt;
}

StabilizerTableau entstruct::worked_example(WorkedExample which) {
    switch (which) {
        case WorkedExample::FourQubit:
            return four_qubit_example();
        case WorkedExample::TenQubit:
            return ten_qubit_example();
    }
    throw std::invalid_argument("unknown example");
}

NamedState entstruct::make_named_state(std::string_view name, std::optional<size_t> n, Boundary boundary, bool complete) {
    auto need_n = [&]() {
        if (!n) {
            throw std::invalid_argument("state '" + std::string(name) + "' needs a qubit count");
        }
        return *n;
    };
    auto no_n = [&]() {
        if (n) {
            throw std::invalid_argument("state '" + std::string(name) + "' takes no qubit count");
        }
    };
    NamedState s;
    s.name = std::string(name);
    if (name == "ghz") {
        s.generators = ghz(need_n()).generators();
    } else if (name == "cluster1d") {
        s.generators = cluster1d(need_n(), boundary).generators();
    } else if (name == "code5") {
        no_n();
        s.generators = five_qubit_code_logical_x().generators();
    } else if (name == "steane") {
        no_n();
        s.generators = steane_code_logical_x().generators();
    } else if (name == "fig1") {
        no_n();
        s.generators = four_qubit_example().generators();
    } else if (name == "fig2") {
        no_n();
        if (complete) {
            std::optional<StabilizerTableau> t = complete_ten_qubit_example();
            if (!t) {
                throw std::runtime_error("no completion of the ten-qubit list reproduces its diagram");
            }
            s.generators = t->generators();
        } else {
            s.generators = ten_qubit_listed_generators();
            try {
                ten_qubit_example();
            } catch (const ValidationError &e) {
                s.defect = e.what();
            }
        }
    } else {
        throw std::invalid_argument("unknown state '" + std::string(name) + "' (expected ghz, cluster1d, code5, steane, fig1, fig2)");
    }
    return s;
}
