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

#ifndef ENTSTRUCT_ENTROPY_H
#define ENTSTRUCT_ENTROPY_H

#include <cstdint>
#include <initializer_list>
#include <mutex>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "entstruct/gf2.h"
#include "entstruct/tableau.h"

namespace entstruct {

/// A sorted set of distinct 0-based qubit indices. Text forms are 1-based.
class QubitSet {
   public:
    QubitSet() = default;
    /// Sorts the input. Throws std::invalid_argument on a repeated index.
    explicit QubitSet(std::vector<uint32_t> qubits);
    QubitSet(std::initializer_list<uint32_t> qubits) : QubitSet(std::vector<uint32_t>(qubits)) {
    }
    static QubitSet range(uint32_t begin, uint32_t end);

    size_t size() const {
        return qubits_.size();
    }
    bool empty() const {
        return qubits_.empty();
    }
    auto begin() const {
        return qubits_.begin();
    }
    auto end() const {
        return qubits_.end();
    }
    uint32_t operator[](size_t i) const {
        return qubits_[i];
    }
    uint32_t front() const {
        return qubits_.front();
    }
    uint32_t back() const {
        return qubits_.back();
    }
    const std::vector<uint32_t> &values() const {
        return qubits_;
    }

    bool contains(uint32_t q) const;
    bool is_subset_of(const QubitSet &other) const;
    bool intersects(const QubitSet &other) const;
    QubitSet united(const QubitSet &other) const;
    QubitSet complement(uint32_t n) const;

    /// "{1,2,5}" with 1-based labels.
    std::string to_string() const;

    auto operator<=>(const QubitSet &other) const = default;

   private:
    std::vector<uint32_t> qubits_;
};

/// Entanglement entropies of qubit subsets of one fixed state, in units of ln 2.
///
/// Keeps the tableau column-major (one GF(2) vector per qubit column over the generators), so the
/// reduced matrix of a region is just a gather of 2|A| vectors. Results of `entropy_bits` are
/// memoized; the cache is mutex-guarded so one instance can serve several threads.
class EntropyCalculator {
   public:
    explicit EntropyCalculator(const StabilizerTableau &t);

    size_t num_qubits() const {
        return num_qubits_;
    }
    size_t num_generators() const {
        return num_generators_;
    }

    size_t entropy_bits(const QubitSet &a) const;
    size_t entropy_bits(std::span<const uint32_t> qubits) const;
    size_t entropy_bits_uncached(std::span<const uint32_t> qubits) const;

    /// Adds the X and Z columns of qubit q to the basis. The basis must have num_generators() bits.
    void insert_qubit(XorBasis &basis, uint32_t q) const {
        basis.insert(x_columns_.row(q));
        basis.insert(z_columns_.row(q));
    }

    size_t cache_size() const;

   private:
    size_t num_qubits_;
    size_t num_generators_;
    BitMatrix x_columns_;
    BitMatrix z_columns_;
    mutable std::mutex cache_mutex_;
    mutable std::unordered_map<std::string, uint32_t> cache_;
};

/// S(A)/ln 2: GF(2) rank of the generator matrix restricted to the X and Z columns of A, minus |A|.
size_t entropy_bits(const StabilizerTableau &t, const QubitSet &a);

/// Total correlations sum_i S(A_i) - S(union A_i), in units of ln 2. Throws std::invalid_argument
/// when two groups overlap or a group is empty.
size_t total_correlations(const StabilizerTableau &t, const std::vector<QubitSet> &groups);
size_t total_correlations(const EntropyCalculator &calc, const std::vector<QubitSet> &groups);

/// Number of independent stabilizers supported entirely inside A: |A| - S(A).
size_t confined_stabilizer_count(const StabilizerTableau &t, const QubitSet &a);

}  // namespace entstruct

#endif
