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

#ifndef ENTSTRUCT_STATES_H
#define ENTSTRUCT_STATES_H

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "entstruct/clustering.h"
#include "entstruct/tableau.h"

namespace entstruct {

enum class Boundary { Periodic, Open };

/// |0...0>: generators Z_1 ... Z_n.
StabilizerTableau product_state(size_t n);

/// Z_i Z_{i+1} for i < n, plus X_1 ... X_n. Requires n >= 2.
StabilizerTableau ghz(size_t n);

/// Z_{j-1} X_j Z_{j+1}; open chains drop the missing neighbours at the ends. Requires n >= 3.
StabilizerTableau cluster1d(size_t n, Boundary boundary);

/// [[5,1,3]] code (cyclic shifts of XZZXI) in the +1 eigenstate of XXXXX.
StabilizerTableau five_qubit_code_logical_x();

/// Steane code (CSS checks from the [7,4] Hamming code) in the +1 eigenstate of X^7.
StabilizerTableau steane_code_logical_x();

/// Four-qubit example: Z1 Z2, Z3 Z4, -X1 X2 Z3, -Z2 X3 X4. The signs make the state
/// |1111> + |0011> + |1100> - |0000> (qubit 1 leftmost).
StabilizerTableau four_qubit_example();

/// The ten-qubit generator list as published. It is defective: the third and fourth entries are
/// the same string, so only nine generators are independent.
std::vector<PauliString> ten_qubit_listed_generators();

/// Always throws ValidationError naming the defect of the published list.
StabilizerTableau ten_qubit_example();

/// The published diagram of the ten-qubit example: [[(1,3),2],[4,(5,6)]] and (7,8,9,10),
/// every cluster with w = 2.
Diagram ten_qubit_target_diagram();

/// Replaces the duplicate with the first Pauli on qubits 1-6 (enumerated in base-4 order, I<X<Y<Z,
/// qubit 1 least significant) that commutes with the rest, is independent, and makes the diagram
/// equal `ten_qubit_target_diagram()`. Empty when no such Pauli exists.
std::optional<StabilizerTableau> complete_ten_qubit_example();

enum class WorkedExample { FourQubit, TenQubit };
StabilizerTableau worked_example(WorkedExample which);

/// A state requested by name, as produced by the `gen` command.
struct NamedState {
    std::string name;
    std::vector<PauliString> generators;
    /// Set for the published ten-qubit list, which does not form a valid tableau.
    std::optional<std::string> defect;
};

/// Names: ghz, cluster1d, code5, steane, fig1, fig2. `n` is required by ghz and cluster1d only.
/// With `complete`, fig2 is returned with its missing generator filled in. Throws
/// std::invalid_argument for unknown names or bad parameters.
NamedState make_named_state(std::string_view name, std::optional<size_t> n, Boundary boundary, bool complete);

}  // namespace entstruct

#endif
