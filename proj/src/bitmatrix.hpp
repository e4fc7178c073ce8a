#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace pgrank {

/// Dense matrix over the two-element field. Each row is packed into 64-bit
/// words: bit j of word w covers column w*64 + j. Bits past the last column
/// of a row are kept at zero by every operation.
class BitMatrix {
public:
    using word = std::uint64_t;
    static constexpr std::size_t word_bits = 64;

    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols);

    static BitMatrix identity(std::size_t n);
    static BitMatrix ones(std::size_t rows, std::size_t cols);
    static BitMatrix zero(std::size_t rows, std::size_t cols) { return BitMatrix(rows, cols); }
    static BitMatrix random(std::size_t rows, std::size_t cols, std::uint64_t seed);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t words_per_row() const { return stride_; }

    bool get(std::size_t r, std::size_t c) const;
    void set(std::size_t r, std::size_t c, bool v);

    std::span<const word> row(std::size_t r) const;
    std::span<word> row(std::size_t r);

    std::size_t row_popcount(std::size_t r) const;
    std::size_t popcount() const;

    /// Rank over GF(2) by bit-packed Gaussian elimination; the matrix itself
    /// is left untouched (elimination runs on a copy).
    std::size_t rank() const;

    BitMatrix transposed() const;
    BitMatrix pow(std::uint64_t e) const;

    /// Rows and columns picked by global index, in the order given.
    BitMatrix submatrix(std::span<const std::uint32_t> row_idx,
                        std::span<const std::uint32_t> col_idx) const;

    /// Entrywise XOR.
    BitMatrix operator+(const BitMatrix& other) const;
    bool operator==(const BitMatrix& other) const = default;

    /// Representation hygiene: bits beyond the last column must stay zero.
    bool padding_clear() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::size_t stride_ = 0;
    std::vector<word> data_;
};

/// GF(2) product, dispatching to the four-Russians path for large inputs.
BitMatrix multiply(const BitMatrix& a, const BitMatrix& b);
/// Row-broadcast schoolbook product.
BitMatrix multiply_naive(const BitMatrix& a, const BitMatrix& b);
/// Four-Russians product; bit-identical to multiply_naive.
BitMatrix multiply_m4r(const BitMatrix& a, const BitMatrix& b);

/// Naive rank on an unpacked byte-per-entry copy. Limited to 512x512;
/// exists only to cross-check BitMatrix::rank and shares no code with it.
std::size_t rank_oracle(const BitMatrix& m);

}  // namespace pgrank
