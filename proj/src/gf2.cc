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

#include "entstruct/gf2.h"

#include <algorithm>
#include <bit>
#include <stdexcept>

using namespace entstruct;

BitMatrix::BitMatrix(size_t rows, size_t cols)
    : rows_(rows), cols_(cols), words_per_row_(words_for_bits(cols)), data_(rows * words_per_row_, 0) {
}

BitMatrix BitMatrix::from_strings(std::initializer_list<std::string_view> rows) {
    size_t cols = rows.size() == 0 ? 0 : rows.begin()->size();
    BitMatrix m(rows.size(), cols);
    size_t r = 0;
    for (std::string_view row : rows) {
        if (row.size() != cols) {
            throw std::invalid_argument("BitMatrix rows must have equal length");
        }
        for (size_t c = 0; c < cols; c++) {
            if (row[c] == '1') {
                m.set(r, c, true);
            } else if (row[c] != '0') {
                throw std::invalid_argument("BitMatrix rows must contain only '0' and '1'");
            }
        }
        r++;
    }
    return m;
}

BitMatrix BitMatrix::identity(size_t n) {
    BitMatrix m(n, n);
    for (size_t k = 0; k < n; k++) {
        m.set(k, k, true);
    }
    return m;
}

void BitMatrix::xor_row_into(size_t src, size_t dst) {
    uint64_t *d = data_.data() + dst * words_per_row_;
    const uint64_t *s = data_.data() + src * words_per_row_;
    for (size_t w = 0; w < words_per_row_; w++) {
        d[w] ^= s[w];
    }
}

void BitMatrix::swap_rows(size_t a, size_t b) {
    if (a == b) {
        return;
    }
    std::swap_ranges(
        data_.begin() + a * words_per_row_, data_.begin() + (a + 1) * words_per_row_, data_.begin() + b * words_per_row_);
}

bool BitMatrix::row_is_zero(size_t r) const {
    auto v = row(r);
    return std::all_of(v.begin(), v.end(), [](uint64_t w) { return w == 0; });
}

size_t BitMatrix::row_popcount(size_t r) const {
    size_t total = 0;
    for (uint64_t w : row(r)) {
        total += std::popcount(w);
    }
    return total;
}

std::string BitMatrix::to_string() const {
    std::string out;
    out.reserve(rows_ * (cols_ + 1));
    for (size_t r = 0; r < rows_; r++) {
        for (size_t c = 0; c < cols_; c++) {
            out.push_back(get(r, c) ? '1' : '0');
        }
        out.push_back('\n');
    }
    return out;
}

std::vector<size_t> entstruct::row_echelon_in_place(BitMatrix &m, size_t pivot_cols, bool reduce_above) {
    std::vector<size_t> pivots;
    size_t pivot_row = 0;
    const size_t wpr = m.words_per_row();
    pivot_cols = std::min(pivot_cols, m.cols());
    for (size_t col = 0; col < pivot_cols && pivot_row < m.rows(); col++) {
        size_t word = col / 64;
        uint64_t mask = uint64_t{1} << (col % 64);
        size_t found = m.rows();
        for (size_t r = pivot_row; r < m.rows(); r++) {
            if (m.row(r)[word] & mask) {
                found = r;
                break;
            }
        }
        if (found == m.rows()) {
            continue;
        }
        m.swap_rows(found, pivot_row);
        const uint64_t *p = m.row(pivot_row).data();
        size_t start = reduce_above ? 0 : pivot_row + 1;
        for (size_t r = start; r < m.rows(); r++) {
            if (r == pivot_row) {
                continue;
            }
            uint64_t *q = m.row(r).data();
            if (q[word] & mask) {
                // Words left of the pivot are already zero in the pivot row.
                for (size_t w = word; w < wpr; w++) {
                    q[w] ^= p[w];
                }
            }
        }
        pivots.push_back(col);
        pivot_row++;
    }
    return pivots;
}

size_t entstruct::rank(const BitMatrix &m) {
    if (m.rows() == 0 || m.cols() == 0) {
        return 0;
    }
    // The row space dimension is also the column space dimension; eliminate over whichever
    // orientation has fewer vectors, since XorBasis handles one vector at a time.
    if (m.rows() <= m.cols()) {
        XorBasis basis(m.cols());
        for (size_t r = 0; r < m.rows(); r++) {
            basis.insert(m.row(r));
            if (basis.size() == m.cols()) {
                break;
            }
        }
        return basis.size();
    }
    BitMatrix scratch = m;
    return row_echelon_in_place(scratch, scratch.cols(), false).size();
}

BitMatrix entstruct::row_reduce(const BitMatrix &m) {
    BitMatrix out = m;
    row_echelon_in_place(out, out.cols(), true);
    return out;
}

BitMatrix entstruct::select_columns(const BitMatrix &m, std::span<const size_t> cols) {
    std::vector<uint8_t> seen(m.cols(), 0);
    for (size_t c : cols) {
        if (c >= m.cols()) {
            throw std::invalid_argument(
                "column index " + std::to_string(c) + " out of range for " + std::to_string(m.cols()) + " columns");
        }
        if (seen[c]) {
            throw std::invalid_argument("column index " + std::to_string(c) + " selected twice");
        }
        seen[c] = 1;
    }
    BitMatrix out(m.rows(), cols.size());
    for (size_t r = 0; r < m.rows(); r++) {
        for (size_t k = 0; k < cols.size(); k++) {
            if (m.get(r, cols[k])) {
                out.set(r, k, true);
            }
        }
    }
    return out;
}

BitMatrix entstruct::transpose(const BitMatrix &m) {
    BitMatrix out(m.cols(), m.rows());
    for (size_t r = 0; r < m.rows(); r++) {
        auto row = m.row(r);
        for (size_t w = 0; w < row.size(); w++) {
            uint64_t bits = row[w];
            while (bits) {
                size_t c = w * 64 + std::countr_zero(bits);
                out.set(c, r, true);
                bits &= bits - 1;
            }
        }
    }
    return out;
}

XorBasis::XorBasis(size_t bits)
    : bits_(bits), words_(words_for_bits(bits)), vecs_(bits * words_, 0), present_(bits, 0), scratch_(words_, 0) {
}

void XorBasis::clear() {
    std::fill(present_.begin(), present_.end(), 0);
    size_ = 0;
}

bool XorBasis::insert(std::span<const uint64_t> v) {
    if (words_ == 1) {
        uint64_t x = v[0];
        while (x) {
            size_t b = std::countr_zero(x);
            if (!present_[b]) {
                vecs_[b] = x;
                present_[b] = 1;
                size_++;
                return true;
            }
            x ^= vecs_[b];
        }
        return false;
    }
    std::copy(v.begin(), v.begin() + words_, scratch_.begin());
    for (size_t w = 0; w < words_; w++) {
        while (scratch_[w]) {
            size_t b = w * 64 + std::countr_zero(scratch_[w]);
            uint64_t *stored = vecs_.data() + b * words_;
            if (!present_[b]) {
                std::copy(scratch_.begin(), scratch_.end(), stored);
                present_[b] = 1;
                size_++;
                return true;
            }
            // The stored vector's lowest bit is b, so this only touches word w and above.
            for (size_t k = w; k < words_; k++) {
                scratch_[k] ^= stored[k];
            }
        }
    }
    return false;
}

bool XorBasis::contains(std::span<const uint64_t> v) const {
    std::vector<uint64_t> x(v.begin(), v.begin() + words_);
    for (size_t w = 0; w < words_; w++) {
        while (x[w]) {
            size_t b = w * 64 + std::countr_zero(x[w]);
            if (!present_[b]) {
                return false;
            }
            const uint64_t *stored = vecs_.data() + b * words_;
            for (size_t k = w; k < words_; k++) {
                x[k] ^= stored[k];
            }
        }
    }
    return true;
}
