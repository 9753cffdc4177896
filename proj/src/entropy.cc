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

#include "entstruct/entropy.h"

#include <algorithm>
#include <stdexcept>

using namespace entstruct;

QubitSet::QubitSet(std::vector<uint32_t> qubits) : qubits_(std::move(qubits)) {
    std::sort(qubits_.begin(), qubits_.end());
    if (std::adjacent_find(qubits_.begin(), qubits_.end()) != qubits_.end()) {
        throw std::invalid_argument("qubit set contains a repeated index");
    }
}

QubitSet QubitSet::range(uint32_t begin, uint32_t end) {
    std::vector<uint32_t> v;
    for (uint32_t q = begin; q < end; q++) {
        v.push_back(q);
    }
    return QubitSet(std::move(v));
}

bool QubitSet::contains(uint32_t q) const {
    return std::binary_search(qubits_.begin(), qubits_.end(), q);
}

bool QubitSet::is_subset_of(const QubitSet &other) const {
    return std::includes(other.qubits_.begin(), other.qubits_.end(), qubits_.begin(), qubits_.end());
}

bool QubitSet::intersects(const QubitSet &other) const {
    auto a = qubits_.begin();
    auto b = other.qubits_.begin();
    while (a != qubits_.end() && b != other.qubits_.end()) {
        if (*a == *b) {
            return true;
        }
        if (*a < *b) {
            ++a;
        } else {
            ++b;
        }
    }
    return false;
}

QubitSet QubitSet::united(const QubitSet &other) const {
    std::vector<uint32_t> out;
    std::set_union(qubits_.begin(), qubits_.end(), other.qubits_.begin(), other.qubits_.end(), std::back_inserter(out));
    QubitSet s;
    s.qubits_ = std::move(out);
    return s;
}

QubitSet QubitSet::complement(uint32_t n) const {
    std::vector<uint32_t> out;
    for (uint32_t q = 0; q < n; q++) {
        if (!contains(q)) {
            out.push_back(q);
        }
    }
    QubitSet s;
    s.qubits_ = std::move(out);
    return s;
}

std::string QubitSet::to_string() const {
    std::string out = "{";
    for (size_t i = 0; i < qubits_.size(); i++) {
        if (i) {
            out.push_back(',');
        }
        out += std::to_string(qubits_[i] + 1);
    }
    out.push_back('}');
    return out;
}

EntropyCalculator::EntropyCalculator(const StabilizerTableau &t)
    : num_qubits_(t.num_qubits()),
      num_generators_(t.num_generators()),
      x_columns_(transpose(t.xs())),
      z_columns_(transpose(t.zs())) {
}

size_t EntropyCalculator::entropy_bits_uncached(std::span<const uint32_t> qubits) const {
    XorBasis basis(num_generators_);
    for (uint32_t q : qubits) {
        if (q >= num_qubits_) {
            throw std::invalid_argument("qubit index " + std::to_string(q) + " out of range");
        }
        insert_qubit(basis, q);
    }
    return basis.size() - qubits.size();
}

size_t EntropyCalculator::entropy_bits(std::span<const uint32_t> qubits) const {
    std::string key(words_for_bits(num_qubits_) * 8, '\0');
    for (uint32_t q : qubits) {
        if (q >= num_qubits_) {
            throw std::invalid_argument("qubit index " + std::to_string(q) + " out of range");
        }
        key[q / 8] = static_cast<char>(key[q / 8] | (1 << (q % 8)));
    }
    {
        std::lock_guard<std::mutex> lock(cache_mutex_);
        auto it = cache_.find(key);
        if (it != cache_.end()) {
            return it->second;
        }
    }
    size_t s = entropy_bits_uncached(qubits);
    std::lock_guard<std::mutex> lock(cache_mutex_);
    cache_.emplace(std::move(key), static_cast<uint32_t>(s));
    return s;
}

size_t EntropyCalculator::entropy_bits(const QubitSet &a) const {
    return entropy_bits(std::span<const uint32_t>(a.values()));
}

size_t EntropyCalculator::cache_size() const {
    std::lock_guard<std::mutex> lock(cache_mutex_);
    return cache_.size();
}

size_t entstruct::entropy_bits(const StabilizerTableau &t, const QubitSet &a) {
    size_t n = t.num_qubits();
    std::vector<size_t> cols;
    cols.reserve(2 * a.size());
    for (uint32_t q : a) {
        if (q >= n) {
            throw std::invalid_argument("qubit index " + std::to_string(q) + " out of range");
        }
        cols.push_back(q);
    }
    for (uint32_t q : a) {
        cols.push_back(n + q);
    }
    return rank(select_columns(t.bit_matrix(), cols)) - a.size();
}

namespace {

void check_disjoint(const std::vector<QubitSet> &groups) {
    for (size_t i = 0; i < groups.size(); i++) {
        if (groups[i].empty()) {
            throw std::invalid_argument("total correlations: group " + std::to_string(i + 1) + " is empty");
        }
        for (size_t j = 0; j < i; j++) {
            if (groups[i].intersects(groups[j])) {
                throw std::invalid_argument("total correlations: groups " + groups[j].to_string() + " and " +
                                            groups[i].to_string() + " overlap");
            }
        }
    }
}

}  // namespace

size_t entstruct::total_correlations(const EntropyCalculator &calc, const std::vector<QubitSet> &groups) {
    check_disjoint(groups);
    size_t sum = 0;
    QubitSet all;
    for (const QubitSet &g : groups) {
        sum += calc.entropy_bits(g);
        all = all.united(g);
    }
    return sum - calc.entropy_bits(all);
}

size_t entstruct::total_correlations(const StabilizerTableau &t, const std::vector<QubitSet> &groups) {
    check_disjoint(groups);
    size_t sum = 0;
    QubitSet all;
    for (const QubitSet &g : groups) {
        sum += entropy_bits(t, g);
        all = all.united(g);
    }
    return sum - entropy_bits(t, all);
}

size_t entstruct::confined_stabilizer_count(const StabilizerTableau &t, const QubitSet &a) {
    return a.size() - entropy_bits(t, a);
}
