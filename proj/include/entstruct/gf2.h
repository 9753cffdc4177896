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

#ifndef ENTSTRUCT_GF2_H
#define ENTSTRUCT_GF2_H

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace entstruct {

inline size_t words_for_bits(size_t bits) {
    return (bits + 63) / 64;
}

/// A dense binary matrix with each row packed into 64-bit words.
///
/// Bits past `cols()` in the final word of a row are always zero, so rows can be compared and
/// XORed word-at-a-time without masking.
class BitMatrix {
   public:
    BitMatrix() = default;
    BitMatrix(size_t rows, size_t cols);

    /// Builds a matrix from strings of '0'/'1' characters, one per row. All rows must have equal
    /// length.
    static BitMatrix from_strings(std::initializer_list<std::string_view> rows);
    static BitMatrix identity(size_t n);

    size_t rows() const {
        return rows_;
    }
    size_t cols() const {
        return cols_;
    }
    size_t words_per_row() const {
        return words_per_row_;
    }

    bool get(size_t row, size_t col) const {
        return (data_[row * words_per_row_ + col / 64] >> (col % 64)) & 1;
    }
    void set(size_t row, size_t col, bool value) {
        uint64_t &w = data_[row * words_per_row_ + col / 64];
        uint64_t mask = uint64_t{1} << (col % 64);
        w = value ? (w | mask) : (w & ~mask);
    }
    void flip(size_t row, size_t col) {
        data_[row * words_per_row_ + col / 64] ^= uint64_t{1} << (col % 64);
    }

    std::span<uint64_t> row(size_t r) {
        return {data_.data() + r * words_per_row_, words_per_row_};
    }
    std::span<const uint64_t> row(size_t r) const {
        return {data_.data() + r * words_per_row_, words_per_row_};
    }

    /// row[dst] ^= row[src].
    void xor_row_into(size_t src, size_t dst);
    void swap_rows(size_t a, size_t b);
    bool row_is_zero(size_t r) const;
    size_t row_popcount(size_t r) const;

    std::string to_string() const;

    bool operator==(const BitMatrix &other) const = default;

   private:
    size_t rows_ = 0;
    size_t cols_ = 0;
    size_t words_per_row_ = 0;
    std::vector<uint64_t> data_;
};

/// Dimension of the row space over GF(2). Works on a scratch copy.
size_t rank(const BitMatrix &m);

/// Reduced row-echelon form. Pivot columns strictly increase and zero rows are last.
BitMatrix row_reduce(const BitMatrix &m);

/// Copies the listed columns, in the listed order, into a new matrix.
/// Throws std::invalid_argument on an out-of-range or repeated index.
BitMatrix select_columns(const BitMatrix &m, std::span<const size_t> cols);

BitMatrix transpose(const BitMatrix &m);

/// Gaussian elimination in place, choosing pivots only among the first `pivot_cols` columns
/// (the remaining columns ride along, e.g. for tracking row combinations). With `reduce_above`
/// the result is fully reduced. Returns the pivot column of each nonzero leading row, in order.
std::vector<size_t> row_echelon_in_place(BitMatrix &m, size_t pivot_cols, bool reduce_above);

/// Incrementally maintained row-echelon basis of a subspace of GF(2)^bits.
///
/// Stored vectors are indexed by their lowest set bit. Inserting reduces the candidate against the
/// stored vectors and keeps it if anything survives, so `size()` is the rank of everything ever
/// inserted.
class XorBasis {
   public:
    XorBasis() = default;
    explicit XorBasis(size_t bits);

    size_t bits() const {
        return bits_;
    }
    size_t size() const {
        return size_;
    }

    /// Returns true when the vector was independent of the current basis.
    bool insert(std::span<const uint64_t> v);
    bool contains(std::span<const uint64_t> v) const;
    void clear();

   private:
    size_t bits_ = 0;
    size_t words_ = 0;
    size_t size_ = 0;
    std::vector<uint64_t> vecs_;
    std::vector<uint8_t> present_;
    std::vector<uint64_t> scratch_;
};

}  // namespace entstruct

#endif
