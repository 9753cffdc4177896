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

#include "entstruct/oracle.h"

#include <Eigen/Dense>
#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <stdexcept>

#include "entstruct/rng.h"

using namespace entstruct;
using namespace entstruct::oracle;

using cd = std::complex<double>;

namespace {

uint64_t mask_of(std::span<const uint64_t> words, size_t n) {
    uint64_t m = 0;
    for (size_t q = 0; q < n; q++) {
        if ((words[q / 64] >> (q % 64)) & 1) {
            m |= uint64_t{1} << q;
        }
    }
    return m;
}

double norm_squared(const std::vector<cd> &v) {
    double total = 0;
    for (const cd &a : v) {
        total += std::norm(a);
    }
    return total;
}

void check_size(size_t n) {
    if (n > kMaxQubits) {
        throw std::invalid_argument("dense oracle supports at most " + std::to_string(kMaxQubits) + " qubits, got " +
                                    std::to_string(n));
    }
}

}  // namespace

std::vector<cd> oracle::apply_pauli(const PauliString &p, const std::vector<cd> &v) {
    size_t n = p.num_qubits();
    uint64_t x = mask_of(p.xs(), n);
    uint64_t z = mask_of(p.zs(), n);
    // P = (-1)^sign i^{|x&z|} X^x Z^z, since Y = iXZ.
    static const cd kPowers[4] = {cd(1, 0), cd(0, 1), cd(-1, 0), cd(0, -1)};
    unsigned k = (2 * static_cast<unsigned>(p.negative()) + std::popcount(x & z)) & 3;
    std::vector<cd> out(v.size());
    for (uint64_t b = 0; b < v.size(); b++) {
        cd a = v[b] * kPowers[k];
        if (std::popcount(z & b) & 1) {
            a = -a;
        }
        out[b ^ x] = a;
    }
    return out;
}

double oracle::expectation(const DenseState &s, const PauliString &p) {
    std::vector<cd> pv = apply_pauli(p, s.amplitudes);
    cd total = 0;
    for (size_t b = 0; b < pv.size(); b++) {
        total += std::conj(s.amplitudes[b]) * pv[b];
    }
    return total.real();
}

DenseState oracle::tableau_to_state(const StabilizerTableau &t) {
    size_t n = t.num_qubits();
    check_size(n);
    std::vector<PauliString> gens = t.generators();
    size_t dim = size_t{1} << n;
    // A generic start vector overlaps the target with probability one; retry a few streams in case
    // of a numerically tiny overlap.
    for (uint64_t attempt = 0; attempt < 8; attempt++) {
        Rng rng = Rng::derive(0x5eed, attempt);
        std::vector<cd> v(dim);
        for (cd &a : v) {
            double re = static_cast<double>(rng() >> 11) * 0x1.0p-53 - 0.5;
            double im = static_cast<double>(rng() >> 11) * 0x1.0p-53 - 0.5;
            a = cd(re, im);
        }
        double start = norm_squared(v);
        for (const PauliString &g : gens) {
            std::vector<cd> gv = apply_pauli(g, v);
            for (size_t b = 0; b < dim; b++) {
                v[b] = 0.5 * (v[b] + gv[b]);
            }
        }
        double ns = norm_squared(v);
        if (ns > start * 1e-9 / static_cast<double>(dim)) {
            double scale = 1.0 / std::sqrt(ns);
            for (cd &a : v) {
                a *= scale;
            }
            return DenseState{n, std::move(v)};
        }
    }
    throw std::runtime_error("stabilizer projectors annihilate every trial vector; -I is in the group");
}

size_t oracle::dense_entropy_bits(const DenseState &s, const QubitSet &a) {
    size_t n = s.n;
    check_size(n);
    // Entropy is symmetric for a pure state; diagonalize the smaller side.
    QubitSet keep = a.size() * 2 <= n ? a : a.complement(static_cast<uint32_t>(n));
    QubitSet rest = keep.complement(static_cast<uint32_t>(n));
    size_t da = size_t{1} << keep.size();
    size_t db = size_t{1} << rest.size();
    auto spread = [](const QubitSet &qs, uint64_t local) {
        uint64_t out = 0;
        for (size_t i = 0; i < qs.size(); i++) {
            if ((local >> i) & 1) {
                out |= uint64_t{1} << qs[i];
            }
        }
        return out;
    };
    std::vector<uint64_t> a_index(da), b_index(db);
    for (uint64_t i = 0; i < da; i++) {
        a_index[i] = spread(keep, i);
    }
    for (uint64_t j = 0; j < db; j++) {
        b_index[j] = spread(rest, j);
    }
    Eigen::MatrixXcd m(da, db);
    for (size_t i = 0; i < da; i++) {
        for (size_t j = 0; j < db; j++) {
            m(i, j) = s.amplitudes[a_index[i] | b_index[j]];
        }
    }
    Eigen::MatrixXcd rho = m * m.adjoint();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(rho, Eigen::EigenvaluesOnly);
    double entropy = 0;
    for (Eigen::Index i = 0; i < solver.eigenvalues().size(); i++) {
        double lambda = solver.eigenvalues()[i];
        if (lambda > 1e-12) {
            entropy -= lambda * std::log2(lambda);
        }
    }
    double rounded = std::round(entropy);
    if (std::abs(entropy - rounded) >= 1e-6) {
        throw std::runtime_error("dense entropy " + std::to_string(entropy) + " of " + a.to_string() +
                                 " is not an integer number of bits");
    }
    return static_cast<size_t>(rounded);
}

std::vector<QubitSet> oracle::brute_force_partitions(const DenseState &s) {
    size_t n = s.n;
    if (n > 8) {
        throw std::invalid_argument("brute-force partition search supports at most 8 qubits");
    }
    std::map<uint32_t, size_t> cache;
    auto entropy_of = [&](uint32_t mask) {
        auto it = cache.find(mask);
        if (it != cache.end()) {
            return it->second;
        }
        std::vector<uint32_t> qs;
        for (uint32_t q = 0; q < n; q++) {
            if ((mask >> q) & 1) {
                qs.push_back(q);
            }
        }
        size_t e = dense_entropy_bits(s, QubitSet(std::move(qs)));
        cache.emplace(mask, e);
        return e;
    };

    std::vector<QubitSet> blocks;
    uint32_t remaining = n == 0 ? 0 : (uint32_t{1} << n) - 1;
    while (remaining) {
        // The block holding the lowest remaining qubit is the smallest zero-entropy subset of the
        // remaining qubits that contains it.
        uint32_t low = remaining & (~remaining + 1);
        uint32_t others = remaining ^ low;
        uint32_t best = remaining;
        int best_size = std::popcount(remaining);
        for (uint32_t sub = others;; sub = (sub - 1) & others) {
            uint32_t cand = sub | low;
            int size = std::popcount(cand);
            if (size < best_size && entropy_of(cand) == 0) {
                best = cand;
                best_size = size;
            }
            if (sub == 0) {
                break;
            }
        }
        std::vector<uint32_t> qs;
        for (uint32_t q = 0; q < n; q++) {
            if ((best >> q) & 1) {
                qs.push_back(q);
            }
        }
        blocks.emplace_back(std::move(qs));
        remaining &= ~best;
    }
    std::sort(blocks.begin(), blocks.end(), [](const QubitSet &a, const QubitSet &b) { return a.front() < b.front(); });
    return blocks;
}

std::vector<QubitSet> oracle::brute_force_partitions(const StabilizerTableau &t) {
    if (t.num_qubits() > 8) {
        throw std::invalid_argument("brute-force partition search supports at most 8 qubits");
    }
    return brute_force_partitions(tableau_to_state(t));
}

size_t oracle::brute_force_depth(const StabilizerTableau &t) {
    size_t best = 0;
    for (const QubitSet &b : brute_force_partitions(t)) {
        best = std::max(best, b.size());
    }
    return best;
}
