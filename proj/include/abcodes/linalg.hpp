#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace abcodes {

/// Dense row-major matrix over GF(p) with entries in [0, p). The modulus is
/// not stored; every operation takes it explicitly.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool empty() const noexcept { return rows_ == 0; }

    std::uint32_t& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    std::uint32_t operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::span<std::uint32_t> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
    std::span<const std::uint32_t> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

    void append_row(std::span<const std::uint32_t> values);

    bool operator==(const Matrix&) const = default;

    static Matrix from_rows(const std::vector<std::vector<std::uint32_t>>& rows, std::size_t cols);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<std::uint32_t> data_;
};

struct RrefResult {
    Matrix reduced;                   ///< nonzero rows only, pivots normalized to 1
    std::vector<std::size_t> pivots;  ///< pivot column of each reduced row
    std::size_t rank() const noexcept { return pivots.size(); }
};

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p);

RrefResult rref(const Matrix& m, std::uint32_t p);
std::size_t rank(const Matrix& m, std::uint32_t p);

/// Basis of {x : m x^T = 0}, returned in reduced row echelon form. The result
/// has cols() == m.cols() and cols() - rank(m) rows.
Matrix nullspace(const Matrix& m, std::uint32_t p);

/// True when both matrices span the same row space.
bool same_row_space(const Matrix& a, const Matrix& b, std::uint32_t p);

} // namespace abcodes
