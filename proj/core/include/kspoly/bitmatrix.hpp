#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace kspoly {

/// Fixed-length vector over GF(2), packed 64 bits per word.
class BitVector {
public:
    BitVector() = default;
    explicit BitVector(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

    std::size_t size() const { return size_; }

    bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i, bool value = true) {
        const std::uint64_t mask = std::uint64_t{1} << (i & 63);
        if (value)
            words_[i >> 6] |= mask;
        else
            words_[i >> 6] &= ~mask;
    }
    void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

    BitVector& operator^=(const BitVector& other) {
        for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
        return *this;
    }
    friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }

    BitVector operator&(const BitVector& other) const {
        BitVector out(*this);
        for (std::size_t w = 0; w < words_.size(); ++w) out.words_[w] &= other.words_[w];
        return out;
    }

    std::size_t weight() const {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }
    bool any() const {
        for (auto w : words_)
            if (w) return true;
        return false;
    }
    /// Parity of the inner product with `other`.
    bool dot(const BitVector& other) const {
        std::uint64_t acc = 0;
        for (std::size_t w = 0; w < words_.size(); ++w) acc ^= words_[w] & other.words_[w];
        return std::popcount(acc) & 1;
    }
    /// True if every set bit of *this is also set in `other`.
    bool subset_of(const BitVector& other) const {
        for (std::size_t w = 0; w < words_.size(); ++w)
            if (words_[w] & ~other.words_[w]) return false;
        return true;
    }

    /// Positions of the set bits, ascending.
    std::vector<std::size_t> support() const;
    /// "0110..." with bit 0 first.
    std::string to_string() const;

    const std::vector<std::uint64_t>& words() const { return words_; }

    friend bool operator==(const BitVector&, const BitVector&) = default;

private:
    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Dense matrix over GF(2), stored as packed rows.
class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, BitVector(cols)) {}
    /// Reduces an integer matrix (row-major) modulo 2.
    static BitMatrix from_integers(std::size_t rows, std::size_t cols, const std::vector<int>& row_major);
    static BitMatrix from_rows(std::size_t cols, std::vector<BitVector> rows);

    std::size_t rows() const { return rows_.size(); }
    std::size_t cols() const { return cols_; }
    bool test(std::size_t r, std::size_t c) const { return rows_[r].test(c); }
    void set(std::size_t r, std::size_t c, bool v = true) { rows_[r].set(c, v); }
    const BitVector& row(std::size_t r) const { return rows_[r]; }
    const std::vector<BitVector>& row_vectors() const { return rows_; }

    /// M x over GF(2).
    BitVector multiply(const BitVector& x) const;
    /// Keeps only the listed columns, in the given order.
    BitMatrix select_columns(const std::vector<std::size_t>& columns) const;

private:
    std::size_t cols_ = 0;
    std::vector<BitVector> rows_;
};

}  // namespace kspoly
