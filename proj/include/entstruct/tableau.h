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

#ifndef ENTSTRUCT_TABLEAU_H
#define ENTSTRUCT_TABLEAU_H

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "entstruct/gf2.h"
#include "entstruct/rng.h"

namespace entstruct {

/// Malformed Pauli or tableau text. `position` is a 0-based character offset into the parsed
/// string (or line, for tableau files; see `line`).
class ParseError : public std::invalid_argument {
   public:
    ParseError(const std::string &what, size_t position, size_t line = 0)
        : std::invalid_argument(what), position(position), line(line) {
    }
    size_t position;
    size_t line;
};

/// A generator set that does not describe a pure stabilizer state.
class ValidationError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// A Hermitian Pauli operator on n qubits, +/- a tensor product of I, X, Y, Z.
///
/// Qubit j carries bits (x_j, z_j): 00 = I, 10 = X, 11 = Y, 01 = Z. Qubits are 0-based here and
/// 1-based in all text forms.
class PauliString {
   public:
    PauliString() = default;
    explicit PauliString(size_t num_qubits);

    size_t num_qubits() const {
        return num_qubits_;
    }
    bool x(size_t q) const {
        return (xs_[q / 64] >> (q % 64)) & 1;
    }
    bool z(size_t q) const {
        return (zs_[q / 64] >> (q % 64)) & 1;
    }
    bool negative() const {
        return negative_;
    }
    void set_negative(bool negative) {
        negative_ = negative;
    }

    /// One of 'I', 'X', 'Y', 'Z'.
    char at(size_t q) const;
    void set(size_t q, char pauli);

    std::span<const uint64_t> xs() const {
        return xs_;
    }
    std::span<const uint64_t> zs() const {
        return zs_;
    }
    std::span<uint64_t> xs() {
        return xs_;
    }
    std::span<uint64_t> zs() {
        return zs_;
    }

    bool is_identity() const;
    size_t weight() const;
    std::vector<size_t> support() const;
    bool commutes(const PauliString &other) const;

    /// "+XIZY" style, one character per qubit.
    std::string str_dense() const;
    /// "-X1 Z3" style with 1-based labels; the identity is "I". Positive signs are omitted.
    std::string str_sparse() const;

    bool operator==(const PauliString &other) const = default;

   private:
    size_t num_qubits_ = 0;
    std::vector<uint64_t> xs_;
    std::vector<uint64_t> zs_;
    bool negative_ = false;
};

/// Parses dense ("+XIZZY", "_" accepted for I) or sparse ("-X1 Y2", "X1X2Z3") text. A string
/// containing any digit is read as sparse. Throws ParseError on malformed input, out-of-range or
/// repeated qubit labels, or a dense string whose length differs from n.
PauliString parse_pauli(std::string_view text, size_t n);

inline size_t weight(const PauliString &p) {
    return p.weight();
}

/// Product a*b of two commuting Paulis (always Hermitian). Throws std::invalid_argument when they
/// anticommute.
PauliString operator*(const PauliString &a, const PauliString &b);

enum class GroupMembership { YesPlus, YesMinus, No };

/// A Clifford acting on one or two qubits, given by the images of X and Z of each qubit.
///
/// Image k (order X_a, Z_a, X_b, Z_b) is stored as local bits (bit 0 = x_a, bit 1 = z_a,
/// bit 2 = x_b, bit 3 = z_b) plus a sign.
struct LocalClifford {
    size_t arity = 1;
    std::array<uint8_t, 4> images{};
    std::array<bool, 4> negative{};

    /// True when the images obey the Pauli commutation relations of the generators they replace,
    /// i.e. the map is symplectic.
    bool is_symplectic() const;

    static LocalClifford hadamard();
    static LocalClifford phase();
    static LocalClifford cz();
    static LocalClifford cnot();
    static LocalClifford swap();

    /// Uniformly random element of the two-qubit Clifford group (modulo global phase).
    static LocalClifford random_two_qubit(Rng &rng);

    bool operator==(const LocalClifford &other) const = default;
};

enum class Gate { H, S, CZ, CNOT, SWAP };

LocalClifford gate_clifford(Gate gate);

/// A pure stabilizer state: n independent, commuting generators on n qubits.
///
/// Generators are rows of two bit matrices (X part and Z part, one column per qubit) plus a sign
/// per row. Default construction of size n gives |0...0>, stabilized by Z_1 ... Z_n.
class StabilizerTableau {
   public:
    StabilizerTableau() = default;
    explicit StabilizerTableau(size_t num_qubits);

    /// Throws ValidationError unless the generators form a valid tableau.
    static StabilizerTableau from_generators(const std::vector<PauliString> &generators);
    /// Skips validation; callers must check `validation_error()` themselves.
    static StabilizerTableau from_generators_unchecked(const std::vector<PauliString> &generators);

    size_t num_qubits() const {
        return num_qubits_;
    }
    size_t num_generators() const {
        return xs_.rows();
    }
    const BitMatrix &xs() const {
        return xs_;
    }
    const BitMatrix &zs() const {
        return zs_;
    }
    bool sign(size_t generator) const {
        return signs_[generator];
    }

    PauliString generator(size_t index) const;
    std::vector<PauliString> generators() const;
    void set_generator(size_t index, const PauliString &p);

    /// n x 2n matrix [X | Z].
    BitMatrix bit_matrix() const;

    /// Names the first violated invariant: generator count, a non-commuting pair, or linear
    /// dependence. An independent commuting set never contains -I in its group.
    std::optional<std::string> validation_error() const;
    void validate() const;

    /// generator[dst] <- generator[src] * generator[dst]. The two must commute.
    void multiply_into(size_t src, size_t dst);

    void apply(const LocalClifford &gate, std::span<const size_t> qubits);
    void apply(Gate gate, std::span<const size_t> qubits);

    bool operator==(const StabilizerTableau &other) const = default;

   private:
    size_t num_qubits_ = 0;
    BitMatrix xs_;
    BitMatrix zs_;
    std::vector<uint8_t> signs_;
};

/// Returns the tableau conjugated by the gate. Throws std::invalid_argument for a non-symplectic
/// gate, repeated or out-of-range qubits, or an arity mismatch.
StabilizerTableau apply_clifford(StabilizerTableau t, const LocalClifford &gate, std::span<const size_t> qubits);
StabilizerTableau apply_clifford(StabilizerTableau t, Gate gate, std::span<const size_t> qubits);

/// Whether +p or -p belongs to the stabilizer group, decided by a GF(2) solve.
GroupMembership in_group(const StabilizerTableau &t, const PauliString &p);

struct MeasurementResult {
    int outcome = 1;
    bool deterministic = true;
};

/// Projective measurement of the observable p, mutating t. A random outcome replaces the first
/// anticommuting generator with outcome*p after multiplying it into every other anticommuting
/// generator. Throws std::invalid_argument when p is the identity or has the wrong size.
MeasurementResult measure_pauli_in_place(StabilizerTableau &t, const PauliString &p, Rng &rng);

std::pair<StabilizerTableau, int> measure_pauli(StabilizerTableau t, const PauliString &p, Rng &rng);

/// Text tableau format: one generator per line in parse_pauli syntax, '#' starts a comment,
/// blank lines are skipped. The qubit count is the number of generator lines.
StabilizerTableau parse_tableau(std::string_view text);
StabilizerTableau parse_tableau_unchecked(std::string_view text);
std::string format_tableau(const StabilizerTableau &t);

}  // namespace entstruct

#endif
