#include "bitmatrix.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <stdexcept>

namespace pgrank {

namespace {

std::size_t words_for(std::size_t cols) {
    return (cols + BitMatrix::word_bits - 1) / BitMatrix::word_bits;
}

// Mask selecting the valid bits of the last word of a row.
BitMatrix::word tail_mask(std::size_t cols) {
    const std::size_t rem = cols % BitMatrix::word_bits;
    return rem == 0 ? ~BitMatrix::word(0) : (BitMatrix::word(1) << rem) - 1;
}

}  // namespace

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), stride_(words_for(cols)), data_(rows * stride_, 0) {}

BitMatrix BitMatrix::identity(std::size_t n) {
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
    return m;
}

BitMatrix BitMatrix::ones(std::size_t rows, std::size_t cols) {
    BitMatrix m(rows, cols);
    if (cols == 0) return m;
    const word tail = tail_mask(cols);
    for (std::size_t r = 0; r < rows; ++r) {
        auto row = m.row(r);
        std::fill(row.begin(), row.end(), ~word(0));
        row[m.stride_ - 1] = tail;
    }
    return m;
}

BitMatrix BitMatrix::random(std::size_t rows, std::size_t cols, std::uint64_t seed) {
    BitMatrix m(rows, cols);
    if (cols == 0) return m;
    std::mt19937_64 gen(seed);
    const word tail = tail_mask(cols);
    for (std::size_t r = 0; r < rows; ++r) {
        auto row = m.row(r);
        for (auto& w : row) w = gen();
        row[m.stride_ - 1] &= tail;
    }
    return m;
}

bool BitMatrix::get(std::size_t r, std::size_t c) const {
    if (r >= rows_ || c >= cols_) throw std::out_of_range("BitMatrix::get: index out of range");
    return (data_[r * stride_ + c / word_bits] >> (c % word_bits)) & 1u;
}

void BitMatrix::set(std::size_t r, std::size_t c, bool v) {
    if (r >= rows_ || c >= cols_) throw std::out_of_range("BitMatrix::set: index out of range");
    word& w = data_[r * stride_ + c / word_bits];
    const word bit = word(1) << (c % word_bits);
    if (v)
        w |= bit;
    else
        w &= ~bit;
}

std::span<const BitMatrix::word> BitMatrix::row(std::size_t r) const {
    if (r >= rows_) throw std::out_of_range("BitMatrix::row: index out of range");
    return {data_.data() + r * stride_, stride_};
}

std::span<BitMatrix::word> BitMatrix::row(std::size_t r) {
    if (r >= rows_) throw std::out_of_range("BitMatrix::row: index out of range");
    return {data_.data() + r * stride_, stride_};
}

std::size_t BitMatrix::row_popcount(std::size_t r) const {
    std::size_t n = 0;
    for (word w : row(r)) n += std::popcount(w);
    return n;
}

std::size_t BitMatrix::popcount() const {
    std::size_t n = 0;
    for (word w : data_) n += std::popcount(w);
    return n;
}

std::size_t BitMatrix::rank() const {
    if (rows_ == 0 || cols_ == 0) return 0;
    std::vector<word> w(data_);
    const std::size_t stride = stride_;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
        const std::size_t cw = c / word_bits;
        const word bit = word(1) << (c % word_bits);
        std::size_t p = r;
        while (p < rows_ && !(w[p * stride + cw] & bit)) ++p;
        if (p == rows_) continue;
        // Rows at or below r are zero left of column c, so words before cw
        // need neither swapping nor elimination.
        if (p != r)
            std::swap_ranges(w.begin() + p * stride + cw, w.begin() + (p + 1) * stride,
                             w.begin() + r * stride + cw);
        const word* pivot = &w[r * stride];
        for (std::size_t j = r + 1; j < rows_; ++j) {
            word* rj = &w[j * stride];
            if (rj[cw] & bit)
                for (std::size_t t = cw; t < stride; ++t) rj[t] ^= pivot[t];
        }
        ++r;
    }
    return r;
}

BitMatrix BitMatrix::transposed() const {
    BitMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        auto src = row(r);
        for (std::size_t wi = 0; wi < stride_; ++wi) {
            word w = src[wi];
            while (w) {
                const std::size_t c = wi * word_bits + std::countr_zero(w);
                w &= w - 1;
                t.data_[c * t.stride_ + r / word_bits] |= word(1) << (r % word_bits);
            }
        }
    }
    return t;
}

BitMatrix BitMatrix::pow(std::uint64_t e) const {
    if (rows_ != cols_) throw std::invalid_argument("BitMatrix::pow: matrix is not square");
    BitMatrix result = identity(rows_);
    BitMatrix base = *this;
    while (e) {
        if (e & 1) result = multiply(result, base);
        e >>= 1;
        if (e) base = multiply(base, base);
    }
    return result;
}

BitMatrix BitMatrix::submatrix(std::span<const std::uint32_t> row_idx,
                               std::span<const std::uint32_t> col_idx) const {
    BitMatrix m(row_idx.size(), col_idx.size());
    for (std::size_t r = 0; r < row_idx.size(); ++r)
        for (std::size_t c = 0; c < col_idx.size(); ++c)
            if (get(row_idx[r], col_idx[c])) m.set(r, c, true);
    return m;
}

BitMatrix BitMatrix::operator+(const BitMatrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw std::invalid_argument("BitMatrix::operator+: dimension mismatch");
    BitMatrix m = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) m.data_[i] ^= other.data_[i];
    return m;
}

bool BitMatrix::padding_clear() const {
    if (cols_ == 0)
        return std::all_of(data_.begin(), data_.end(), [](word w) { return w == 0; });
    const word tail = tail_mask(cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        if (data_[r * stride_ + stride_ - 1] & ~tail) return false;
    return true;
}

BitMatrix multiply_naive(const BitMatrix& a, const BitMatrix& b) {
    if (a.cols() != b.rows())
        throw std::invalid_argument("multiply: inner dimensions disagree");
    BitMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        auto arow = a.row(i);
        auto crow = c.row(i);
        for (std::size_t wi = 0; wi < arow.size(); ++wi) {
            BitMatrix::word w = arow[wi];
            while (w) {
                const std::size_t k = wi * BitMatrix::word_bits + std::countr_zero(w);
                w &= w - 1;
                auto brow = b.row(k);
                for (std::size_t t = 0; t < brow.size(); ++t) crow[t] ^= brow[t];
            }
        }
    }
    return c;
}

BitMatrix multiply_m4r(const BitMatrix& a, const BitMatrix& b) {
    if (a.cols() != b.rows())
        throw std::invalid_argument("multiply: inner dimensions disagree");
    BitMatrix c(a.rows(), b.cols());
    const std::size_t bs = b.words_per_row();
    if (a.rows() == 0 || bs == 0 || a.cols() == 0) return c;

    // One table per group of 8 rows of b: all 256 XOR combinations.
    std::vector<BitMatrix::word> table(256 * bs);
    const std::size_t groups = (a.cols() + 7) / 8;
    for (std::size_t g = 0; g < groups; ++g) {
        const std::size_t base = g * 8;
        const std::size_t cnt = std::min<std::size_t>(8, a.cols() - base);
        const unsigned entries = 1u << cnt;
        std::fill(table.begin(), table.begin() + bs, 0);
        for (unsigned m = 1; m < entries; ++m) {
            const unsigned prev = m & (m - 1);
            auto brow = b.row(base + std::countr_zero(m));
            BitMatrix::word* dst = table.data() + std::size_t(m) * bs;
            const BitMatrix::word* src = table.data() + std::size_t(prev) * bs;
            for (std::size_t t = 0; t < bs; ++t) dst[t] = src[t] ^ brow[t];
        }
        const std::size_t shift = base % BitMatrix::word_bits;
        const std::size_t wi = base / BitMatrix::word_bits;
        for (std::size_t i = 0; i < a.rows(); ++i) {
            const unsigned idx = (a.row(i)[wi] >> shift) & (entries - 1);
            if (!idx) continue;
            auto crow = c.row(i);
            const BitMatrix::word* src = table.data() + std::size_t(idx) * bs;
            for (std::size_t t = 0; t < bs; ++t) crow[t] ^= src[t];
        }
    }
    return c;
}

BitMatrix multiply(const BitMatrix& a, const BitMatrix& b) {
    // Table setup only pays off once the work is nontrivial.
    const std::size_t work = a.rows() * a.cols();
    if (work >= 1u << 14) return multiply_m4r(a, b);
    return multiply_naive(a, b);
}

std::size_t rank_oracle(const BitMatrix& m) {
    if (m.rows() > 512 || m.cols() > 512)
        throw std::length_error("rank_oracle: matrix exceeds the 512x512 bound");
    const std::size_t rows = m.rows(), cols = m.cols();
    std::vector<std::uint8_t> a(rows * cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) a[r * cols + c] = m.get(r, c) ? 1 : 0;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t p = rank;
        while (p < rows && a[p * cols + c] == 0) ++p;
        if (p == rows) continue;
        if (p != rank)
            for (std::size_t t = 0; t < cols; ++t) std::swap(a[p * cols + t], a[rank * cols + t]);
        for (std::size_t j = rank + 1; j < rows; ++j)
            if (a[j * cols + c])
                for (std::size_t t = c; t < cols; ++t)
                    a[j * cols + t] = (a[j * cols + t] + a[rank * cols + t]) % 2;
        ++rank;
    }
    return rank;
}

}  // namespace pgrank
