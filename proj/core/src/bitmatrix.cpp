#include "kspoly/bitmatrix.hpp"

#include "kspoly/error.hpp"

namespace kspoly {

std::vector<std::size_t> BitVector::support() const {
    std::vector<std::size_t> out;
    for (std::size_t w = 0; w < words_.size(); ++w) {
        std::uint64_t bits = words_[w];
        while (bits) {
            out.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
            bits &= bits - 1;
        }
    }
    return out;
}

std::string BitVector::to_string() const {
    std::string s(size_, '0');
    for (std::size_t i = 0; i < size_; ++i)
        if (test(i)) s[i] = '1';
    return s;
}

BitMatrix BitMatrix::from_integers(std::size_t rows, std::size_t cols, const std::vector<int>& row_major) {
    if (row_major.size() != rows * cols) throw DomainError("matrix entries do not match its shape");
    BitMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            if (row_major[r * cols + c] % 2 != 0) m.set(r, c);
    return m;
}

BitMatrix BitMatrix::from_rows(std::size_t cols, std::vector<BitVector> rows) {
    for (const auto& r : rows)
        if (r.size() != cols) throw DomainError("row width does not match the matrix");
    BitMatrix m;
    m.cols_ = cols;
    m.rows_ = std::move(rows);
    return m;
}

BitVector BitMatrix::multiply(const BitVector& x) const {
    if (x.size() != cols_) throw DomainError("vector length does not match the matrix");
    BitVector out(rows_.size());
    for (std::size_t r = 0; r < rows_.size(); ++r)
        if (rows_[r].dot(x)) out.set(r);
    return out;
}

BitMatrix BitMatrix::select_columns(const std::vector<std::size_t>& columns) const {
    BitMatrix out(rows_.size(), columns.size());
    for (std::size_t r = 0; r < rows_.size(); ++r)
        for (std::size_t j = 0; j < columns.size(); ++j)
            if (rows_[r].test(columns[j])) out.set(r, j);
    return out;
}

}  // namespace kspoly
