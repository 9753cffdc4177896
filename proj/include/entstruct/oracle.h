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

#ifndef ENTSTRUCT_ORACLE_H
#define ENTSTRUCT_ORACLE_H

// Dense state-vector reference used to cross-check the stabilizer fast path at small n.

#include <complex>
#include <vector>

#include "entstruct/entropy.h"
#include "entstruct/tableau.h"

namespace entstruct::oracle {

constexpr size_t kMaxQubits = 14;

/// Unit vector of 2^n amplitudes. Qubit j is bit j of the basis index.
struct DenseState {
    size_t n = 0;
    std::vector<std::complex<double>> amplitudes;

    std::complex<double> amplitude(uint64_t basis_index) const {
        return amplitudes[basis_index];
    }
};

/// Applies p (with its sign) to a dense vector.
std::vector<std::complex<double>> apply_pauli(const PauliString &p, const std::vector<std::complex<double>> &v);

/// <s|p|s>.
double expectation(const DenseState &s, const PauliString &p);

/// The +1 eigenstate of every generator, built by applying the projectors (1 + g)/2 to a fixed
/// generic vector. Throws std::invalid_argument if n > kMaxQubits and std::runtime_error if the
/// projectors annihilate everything (-I in the group).
DenseState tableau_to_state(const StabilizerTableau &t);

/// Von Neumann entropy of the reduced state on `a`, in bits, rounded. Throws std::runtime_error
/// when the entropy is not within 1e-6 of an integer.
size_t dense_entropy_bits(const DenseState &s, const QubitSet &a);

/// Finest product decomposition found by exhaustive search over qubit subsets, sorted by smallest
/// member. Requires n <= 8.
std::vector<QubitSet> brute_force_partitions(const StabilizerTableau &t);
std::vector<QubitSet> brute_force_partitions(const DenseState &s);

/// Size of the largest block of `brute_force_partitions`.
size_t brute_force_depth(const StabilizerTableau &t);

}  // namespace entstruct::oracle

#endif
