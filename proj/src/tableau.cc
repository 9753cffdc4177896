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

#include "entstruct/tableau.h"

#include <algorithm>
#include <bit>
#include <cctype>
#include <sstream>

using namespace entstruct;

// Phase bookkeeping uses the "raw" form i^k X^x Z^z (X before Z on every qubit). A Hermitian
// Pauli with sign bit s has k = 2s + |x & z|, and multiplying raw forms only needs
// Z^a X^b = (-1)^{a.b} X^b Z^a, i.e. k = k1 + k2 + 2|z1 & x2|.

namespace {

size_t popcount_and(std::span<const uint64_t> a, std::span<const uint64_t> b) {
    size_t total = 0;
    for (size_t w = 0; w < a.size(); w++) {
        total += std::popcount(a[w] & b[w]);
    }
    return total;
}

constexpr uint8_t kLocalXMask = 0b0101;

uint8_t local_x(uint8_t v) {
    return v & kLocalXMask;
}
uint8_t local_z(uint8_t v) {
    return (v >> 1) & kLocalXMask;
}

bool local_anticommute(uint8_t u, uint8_t v) {
    return (std::popcount(static_cast<unsigned>(local_x(u) & local_z(v))) +
            std::popcount(static_cast<unsigned>(local_z(u) & local_x(v)))) &
           1;
}

struct RawLocal {
    unsigned k = 0;
    uint8_t bits = 0;

    void times(const RawLocal &rhs) {
        k += rhs.k + 2 * std::popcount(static_cast<unsigned>(local_z(bits) & local_x(rhs.bits)));
        bits ^= rhs.bits;
    }
};

}  // namespace

PauliString::PauliString(size_t num_qubits)
    : num_qubits_(num_qubits), xs_(words_for_bits(num_qubits), 0), zs_(words_for_bits(num_qubits), 0) {
}

char PauliString::at(size_t q) const {
    return "IXZY"[x(q) | (z(q) << 1)];
}

void PauliString::set(size_t q, char pauli) {
    bool bx = pauli == 'X' || pauli == 'Y';
    bool bz = pauli == 'Z' || pauli == 'Y';
    if (!bx && !bz && pauli != 'I') {
        throw std::invalid_argument(std::string("not a Pauli: ") + pauli);
    }
    uint64_t mask = uint64_t{1} << (q % 64);
    xs_[q / 64] = bx ? (xs_[q / 64] | mask) : (xs_[q / 64] & ~mask);
    zs_[q / 64] = bz ? (zs_[q / 64] | mask) : (zs_[q / 64] & ~mask);
}

bool PauliString::is_identity() const {
    for (size_t w = 0; w < xs_.size(); w++) {
        if (xs_[w] | zs_[w]) {
            return false;
        }
    }
    return true;
}

size_t PauliString::weight() const {
    size_t total = 0;
    for (size_t w = 0; w < xs_.size(); w++) {
        total += std::popcount(xs_[w] | zs_[w]);
    }
    return total;
}

std::vector<size_t> PauliString::support() const {
    std::vector<size_t> out;
    for (size_t q = 0; q < num_qubits_; q++) {
        if (x(q) || z(q)) {
            out.push_back(q);
        }
    }
    return out;
}

bool PauliString::commutes(const PauliString &other) const {
    if (other.num_qubits_ != num_qubits_) {
        throw std::invalid_argument("Pauli strings act on different numbers of qubits");
    }
    return ((popcount_and(xs_, other.zs_) + popcount_and(zs_, other.xs_)) & 1) == 0;
}

std::string PauliString::str_dense() const {
    std::string out(negative_ ? "-" : "+");
    for (size_t q = 0; q < num_qubits_; q++) {
        out.push_back(at(q) == 'I' ? '_' : at(q));
    }
    return out;
}

std::string PauliString::str_sparse() const {
    std::string out = negative_ ? "-" : "";
    bool first = true;
    for (size_t q = 0; q < num_qubits_; q++) {
        char c = at(q);
        if (c == 'I') {
            continue;
        }
        if (!first) {
            out.push_back(' ');
        }
        first = false;
        out.push_back(c);
        out += std::to_string(q + 1);
    }
    if (first) {
        out.push_back('I');
    }
    return out;
}

PauliString entstruct::parse_pauli(std::string_view text, size_t n) {
    PauliString result(n);
    size_t pos = 0;
    auto skip_space = [&]() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) {
            pos++;
        }
    };
    skip_space();
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
        result.set_negative(text[pos] == '-');
        pos++;
        skip_space();
    }
    size_t end = text.size();
    while (end > pos && std::isspace(static_cast<unsigned char>(text[end - 1]))) {
        end--;
    }
    auto is_pauli = [](char c) { return c == 'I' || c == 'X' || c == 'Y' || c == 'Z'; };
    bool sparse = std::any_of(text.begin() + pos, text.begin() + end, [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });

    if (!sparse) {
        if (end - pos != n) {
            throw ParseError(
                "dense Pauli string has " + std::to_string(end - pos) + " characters, expected " + std::to_string(n), pos);
        }
        for (size_t q = 0; q < n; q++) {
            char c = text[pos + q];
            if (c == '_') {
                c = 'I';
            }
            if (!is_pauli(c)) {
                throw ParseError(std::string("unexpected character '") + text[pos + q] + "'", pos + q);
            }
            result.set(q, c);
        }
        return result;
    }

    std::vector<uint8_t> seen(n, 0);
    while (pos < end) {
        char c = text[pos];
        if (!is_pauli(c)) {
            throw ParseError(std::string("expected one of I, X, Y, Z but got '") + c + "'", pos);
        }
        size_t letter_pos = pos++;
        if (pos >= end || !std::isdigit(static_cast<unsigned char>(text[pos]))) {
            throw ParseError("expected a qubit label after '" + std::string(1, c) + "'", pos);
        }
        size_t label = 0;
        while (pos < end && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            label = label * 10 + static_cast<size_t>(text[pos] - '0');
            if (label > (size_t{1} << 32)) {
                throw ParseError("qubit label too large", letter_pos);
            }
            pos++;
        }
        if (label < 1 || label > n) {
            throw ParseError(
                "qubit label " + std::to_string(label) + " out of range 1.." + std::to_string(n), letter_pos + 1);
        }
        if (seen[label - 1]) {
            throw ParseError("qubit label " + std::to_string(label) + " appears twice", letter_pos + 1);
        }
        seen[label - 1] = 1;
        result.set(label - 1, c);
        skip_space();
    }
    return result;
}

PauliString entstruct::operator*(const PauliString &a, const PauliString &b) {
    if (!a.commutes(b)) {
        throw std::invalid_argument("product of anticommuting Pauli strings is not Hermitian");
    }
    PauliString out(a.num_qubits());
    size_t k = 2 * a.negative() + popcount_and(a.xs(), a.zs()) + 2 * b.negative() + popcount_and(b.xs(), b.zs()) +
               2 * popcount_and(a.zs(), b.xs());
    for (size_t w = 0; w < out.xs().size(); w++) {
        out.xs()[w] = a.xs()[w] ^ b.xs()[w];
        out.zs()[w] = a.zs()[w] ^ b.zs()[w];
    }
    // Unsigned wraparound is harmless: only k mod 4 matters and 2^64 is a multiple of 4.
    k -= popcount_and(out.xs(), out.zs());
    out.set_negative((k / 2) & 1);
    return out;
}

bool LocalClifford::is_symplectic() const {
    if (arity != 1 && arity != 2) {
        return false;
    }
    uint8_t allowed = arity == 1 ? 0b0011 : 0b1111;
    for (size_t i = 0; i < 2 * arity; i++) {
        if (images[i] == 0 || (images[i] & ~allowed)) {
            return false;
        }
        for (size_t j = i + 1; j < 2 * arity; j++) {
            // X_q and Z_q of the same qubit are adjacent (2q, 2q+1) and must anticommute.
            bool want_anti = (i / 2 == j / 2);
            if (local_anticommute(images[i], images[j]) != want_anti) {
                return false;
            }
        }
    }
    return true;
}

LocalClifford LocalClifford::hadamard() {
    return {1, {0b10, 0b01, 0, 0}, {}};
}

LocalClifford LocalClifford::phase() {
    return {1, {0b11, 0b10, 0, 0}, {}};
}

LocalClifford LocalClifford::cz() {
    return {2, {0b1001, 0b0010, 0b0110, 0b1000}, {}};
}

LocalClifford LocalClifford::cnot() {
    return {2, {0b0101, 0b0010, 0b0100, 0b1010}, {}};
}

LocalClifford LocalClifford::swap() {
    return {2, {0b0100, 0b1000, 0b0001, 0b0010}, {}};
}

LocalClifford LocalClifford::random_two_qubit(Rng &rng) {
    LocalClifford g;
    g.arity = 2;
    auto pick = [&rng](auto accept) {
        uint8_t candidates[16];
        size_t count = 0;
        for (uint8_t v = 1; v < 16; v++) {
            if (accept(v)) {
                candidates[count++] = v;
            }
        }
        return candidates[rng.below(count)];
    };
    g.images[0] = pick([](uint8_t) { return true; });
    g.images[1] = pick([&](uint8_t v) { return local_anticommute(v, g.images[0]); });
    g.images[2] = pick([&](uint8_t v) {
        return !local_anticommute(v, g.images[0]) && !local_anticommute(v, g.images[1]);
    });
    g.images[3] = pick([&](uint8_t v) {
        return !local_anticommute(v, g.images[0]) && !local_anticommute(v, g.images[1]) &&
               local_anticommute(v, g.images[2]);
    });
    for (bool &s : g.negative) {
        s = rng.coin();
    }
    return g;
}

LocalClifford entstruct::gate_clifford(Gate gate) {
    switch (gate) {
        case Gate::H:
            return LocalClifford::hadamard();
        case Gate::S:
            return LocalClifford::phase();
        case Gate::CZ:
            return LocalClifford::cz();
        case Gate::CNOT:
            return LocalClifford::cnot();
        case Gate::SWAP:
            return LocalClifford::swap();
    }
    throw std::invalid_argument("unknown gate");
}

StabilizerTableau::StabilizerTableau(size_t num_qubits)
    : num_qubits_(num_qubits), xs_(num_qubits, num_qubits), zs_(num_qubits, num_qubits), signs_(num_qubits, 0) {
    for (size_t q = 0; q < num_qubits; q++) {
        zs_.set(q, q, true);
    }
}

StabilizerTableau StabilizerTableau::from_generators_unchecked(const std::vector<PauliString> &generators) {
    size_t n = generators.empty() ? 0 : generators.front().num_qubits();
    StabilizerTableau t;
    t.num_qubits_ = n;
    t.xs_ = BitMatrix(generators.size(), n);
    t.zs_ = BitMatrix(generators.size(), n);
    t.signs_.assign(generators.size(), 0);
    for (size_t r = 0; r < generators.size(); r++) {
        if (generators[r].num_qubits() != n) {
            throw ValidationError("generator " + std::to_string(r + 1) + " acts on " +
                                  std::to_string(generators[r].num_qubits()) + " qubits, expected " +
                                  std::to_string(n));
        }
        t.set_generator(r, generators[r]);
    }
    return t;
}

StabilizerTableau StabilizerTableau::from_generators(const std::vector<PauliString> &generators) {
    StabilizerTableau t = from_generators_unchecked(generators);
    t.validate();
    return t;
}

PauliString StabilizerTableau::generator(size_t index) const {
    PauliString p(num_qubits_);
    auto xr = xs_.row(index);
    auto zr = zs_.row(index);
    std::copy(xr.begin(), xr.end(), p.xs().begin());
    std::copy(zr.begin(), zr.end(), p.zs().begin());
    p.set_negative(signs_[index]);
    return p;
}

std::vector<PauliString> StabilizerTableau::generators() const {
    std::vector<PauliString> out;
    out.reserve(num_generators());
    for (size_t r = 0; r < num_generators(); r++) {
        out.push_back(generator(r));
    }
    return out;
}

void StabilizerTableau::set_generator(size_t index, const PauliString &p) {
    if (p.num_qubits() != num_qubits_) {
        throw std::invalid_argument("generator size mismatch");
    }
    std::copy(p.xs().begin(), p.xs().end(), xs_.row(index).begin());
    std::copy(p.zs().begin(), p.zs().end(), zs_.row(index).begin());
    signs_[index] = p.negative();
}

BitMatrix StabilizerTableau::bit_matrix() const {
    size_t n = num_qubits_;
    BitMatrix m(num_generators(), 2 * n);
    for (size_t r = 0; r < num_generators(); r++) {
        for (size_t q = 0; q < n; q++) {
            if (xs_.get(r, q)) {
                m.set(r, q, true);
            }
            if (zs_.get(r, q)) {
                m.set(r, n + q, true);
            }
        }
    }
    return m;
}

std::optional<std::string> StabilizerTableau::validation_error() const {
    if (num_generators() != num_qubits_) {
        return "expected " + std::to_string(num_qubits_) + " generators for " + std::to_string(num_qubits_) +
               " qubits, got " + std::to_string(num_generators());
    }
    for (size_t a = 0; a < num_generators(); a++) {
        for (size_t b = a + 1; b < num_generators(); b++) {
            size_t s = popcount_and(xs_.row(a), zs_.row(b)) + popcount_and(zs_.row(a), xs_.row(b));
            if (s & 1) {
                return "generators " + std::to_string(a + 1) + " and " + std::to_string(b + 1) + " anticommute";
            }
        }
    }
    size_t r = rank(bit_matrix());
    if (r != num_generators()) {
        return "generators are linearly dependent (rank " + std::to_string(r) + " of " +
               std::to_string(num_generators()) + ")";
    }
    return std::nullopt;
}

void StabilizerTableau::validate() const {
    if (auto err = validation_error()) {
        throw ValidationError(*err);
    }
}

void StabilizerTableau::multiply_into(size_t src, size_t dst) {
    auto xsrc = xs_.row(src);
    auto zsrc = zs_.row(src);
    auto xdst = xs_.row(dst);
    auto zdst = zs_.row(dst);
    size_t k = 2 * signs_[src] + popcount_and(xsrc, zsrc) + 2 * signs_[dst] + popcount_and(xdst, zdst) +
               2 * popcount_and(zsrc, xdst);
    xs_.xor_row_into(src, dst);
    zs_.xor_row_into(src, dst);
    size_t kk = popcount_and(xs_.row(dst), zs_.row(dst));
    // Both rows are stabilizers, so they commute and k - kk is even.
    signs_[dst] = ((k - kk) / 2) & 1;
}

void StabilizerTableau::apply(const LocalClifford &gate, std::span<const size_t> qubits) {
    if (!gate.is_symplectic()) {
        throw std::invalid_argument("Clifford images are not symplectic");
    }
    if (qubits.size() != gate.arity) {
        throw std::invalid_argument(
            "gate acts on " + std::to_string(gate.arity) + " qubits but " + std::to_string(qubits.size()) + " given");
    }
    for (size_t i = 0; i < qubits.size(); i++) {
        if (qubits[i] >= num_qubits_) {
            throw std::invalid_argument("qubit index " + std::to_string(qubits[i]) + " out of range");
        }
        for (size_t j = 0; j < i; j++) {
            if (qubits[i] == qubits[j]) {
                throw std::invalid_argument("gate qubits must be distinct");
            }
        }
    }
    RawLocal images[4];
    for (size_t i = 0; i < 2 * gate.arity; i++) {
        uint8_t v = gate.images[i];
        images[i] = {2u * gate.negative[i] + static_cast<unsigned>(std::popcount(static_cast<unsigned>(local_x(v) & local_z(v)))), v};
    }
    for (size_t r = 0; r < num_generators(); r++) {
        uint8_t old_bits = 0;
        for (size_t i = 0; i < gate.arity; i++) {
            old_bits |= static_cast<uint8_t>(xs_.get(r, qubits[i]) << (2 * i));
            old_bits |= static_cast<uint8_t>(zs_.get(r, qubits[i]) << (2 * i + 1));
        }
        if (old_bits == 0) {
            continue;
        }
        RawLocal acc;
        for (size_t i = 0; i < 2 * gate.arity; i++) {
            if ((old_bits >> i) & 1) {
                acc.times(images[i]);
            }
        }
        unsigned old_yy = std::popcount(static_cast<unsigned>(local_x(old_bits) & local_z(old_bits)));
        unsigned new_yy = std::popcount(static_cast<unsigned>(local_x(acc.bits) & local_z(acc.bits)));
        unsigned k = 2 * signs_[r] + old_yy + acc.k + 4 - new_yy;
        signs_[r] = (k / 2) & 1;
        for (size_t i = 0; i < gate.arity; i++) {
            xs_.set(r, qubits[i], (acc.bits >> (2 * i)) & 1);
            zs_.set(r, qubits[i], (acc.bits >> (2 * i + 1)) & 1);
        }
    }
}

void StabilizerTableau::apply(Gate gate, std::span<const size_t> qubits) {
    apply(gate_clifford(gate), qubits);
}

StabilizerTableau entstruct::apply_clifford(StabilizerTableau t, const LocalClifford &gate, std::span<const size_t> qubits) {
    t.apply(gate, qubits);
    return t;
}

StabilizerTableau entstruct::apply_clifford(StabilizerTableau t, Gate gate, std::span<const size_t> qubits) {
    t.apply(gate, qubits);
    return t;
}

GroupMembership entstruct::in_group(const StabilizerTableau &t, const PauliString &p) {
    size_t n = t.num_qubits();
    size_t g = t.num_generators();
    if (p.num_qubits() != n) {
        throw std::invalid_argument("Pauli string size does not match tableau");
    }
    // Rows are [x | z | unit vector tracking which generators were combined].
    BitMatrix m(g, 2 * n + g);
    for (size_t r = 0; r < g; r++) {
        for (size_t q = 0; q < n; q++) {
            if (t.xs().get(r, q)) {
                m.set(r, q, true);
            }
            if (t.zs().get(r, q)) {
                m.set(r, n + q, true);
            }
        }
        m.set(r, 2 * n + r, true);
    }
    std::vector<size_t> pivots = row_echelon_in_place(m, 2 * n, false);
    BitMatrix target(1, 2 * n + g);
    for (size_t q = 0; q < n; q++) {
        if (p.x(q)) {
            target.set(0, q, true);
        }
        if (p.z(q)) {
            target.set(0, n + q, true);
        }
    }
    auto tr = target.row(0);
    for (size_t i = 0; i < pivots.size(); i++) {
        if (target.get(0, pivots[i])) {
            auto pr = m.row(i);
            for (size_t w = 0; w < tr.size(); w++) {
                tr[w] ^= pr[w];
            }
        }
    }
    for (size_t c = 0; c < 2 * n; c++) {
        if (target.get(0, c)) {
            return GroupMembership::No;
        }
    }
    PauliString product(n);
    for (size_t r = 0; r < g; r++) {
        if (target.get(0, 2 * n + r)) {
            product = product * t.generator(r);
        }
    }
    return product.negative() == p.negative() ? GroupMembership::YesPlus : GroupMembership::YesMinus;
}

MeasurementResult entstruct::measure_pauli_in_place(StabilizerTableau &t, const PauliString &p, Rng &rng) {
    if (p.num_qubits() != t.num_qubits()) {
        throw std::invalid_argument("Pauli string size does not match tableau");
    }
    if (p.is_identity()) {
        throw std::invalid_argument("cannot measure the identity");
    }
    std::vector<size_t> anti;
    for (size_t r = 0; r < t.num_generators(); r++) {
        size_t s = popcount_and(t.xs().row(r), p.zs()) + popcount_and(t.zs().row(r), p.xs());
        if (s & 1) {
            anti.push_back(r);
        }
    }
    if (anti.empty()) {
        GroupMembership m = in_group(t, p);
        if (m == GroupMembership::No) {
            throw std::logic_error("Pauli commutes with a full stabilizer group but is not in it; tableau is invalid");
        }
        return {m == GroupMembership::YesPlus ? 1 : -1, true};
    }
    size_t pivot = anti.front();
    for (size_t k = 1; k < anti.size(); k++) {
        t.multiply_into(pivot, anti[k]);
    }
    int outcome = rng.coin() ? -1 : 1;
    PauliString replacement = p;
    replacement.set_negative(p.negative() != (outcome < 0));
    t.set_generator(pivot, replacement);
    return {outcome, false};
}

std::pair<StabilizerTableau, int> entstruct::measure_pauli(StabilizerTableau t, const PauliString &p, Rng &rng) {
    MeasurementResult r = measure_pauli_in_place(t, p, rng);
    return {std::move(t), r.outcome};
}

namespace {

struct TableauLine {
    std::string_view text;
    size_t line;
};

std::vector<TableauLine> tableau_lines(std::string_view text) {
    std::vector<TableauLine> out;
    size_t line_no = 0;
    size_t start = 0;
    while (start <= text.size()) {
        size_t nl = text.find('\n', start);
        if (nl == std::string_view::npos) {
            nl = text.size();
        }
        line_no++;
        std::string_view line = text.substr(start, nl - start);
        size_t hash = line.find('#');
        if (hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        bool blank = std::all_of(line.begin(), line.end(), [](char c) { return std::isspace(static_cast<unsigned char>(c)); });
        if (!blank) {
            out.push_back({line, line_no});
        }
        start = nl + 1;
    }
    return out;
}

}  // namespace

StabilizerTableau entstruct::parse_tableau_unchecked(std::string_view text) {
    std::vector<TableauLine> lines = tableau_lines(text);
    std::vector<PauliString> gens;
    gens.reserve(lines.size());
    for (const TableauLine &line : lines) {
        try {
            gens.push_back(parse_pauli(line.text, lines.size()));
        } catch (const ParseError &e) {
            throw ParseError("line " + std::to_string(line.line) + ": " + e.what(), e.position, line.line);
        }
    }
    if (gens.empty()) {
        throw ParseError("tableau text contains no generators", 0, 0);
    }
    return StabilizerTableau::from_generators_unchecked(gens);
}

StabilizerTableau entstruct::parse_tableau(std::string_view text) {
    StabilizerTableau t = parse_tableau_unchecked(text);
    t.validate();
    return t;
}

std::string entstruct::format_tableau(const StabilizerTableau &t) {
    std::string out;
    for (size_t r = 0; r < t.num_generators(); r++) {
        out += t.generator(r).str_sparse();
        out.push_back('\n');
    }
    return out;
}
