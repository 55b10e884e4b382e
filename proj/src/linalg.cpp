#include "abcodes/linalg.hpp"

#include "abcodes/error.hpp"

#include <algorithm>
#include <cassert>
#include <tuple>
#include <utility>

namespace abcodes {

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows)
    , cols_(cols)
    , data_(rows * cols, 0)
{
}

void Matrix::append_row(std::span<const std::uint32_t> values)
{
    if (rows_ == 0 && cols_ == 0)
        cols_ = values.size();
    require(values.size() == cols_, ErrorCode::InvalidParameter, "row length mismatch");
    data_.insert(data_.end(), values.begin(), values.end());
    ++rows_;
}

Matrix Matrix::from_rows(const std::vector<std::vector<std::uint32_t>>& rows, std::size_t cols)
{
    Matrix m(0, cols);
    for (const auto& r : rows)
        m.append_row(r);
    return m;
}

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p)
{
    require(a % p != 0, ErrorCode::DivisionByZero, "inverse of zero in GF(p)");
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = p, new_r = a % p;
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        std::tie(t, new_t) = std::make_pair(new_t, t - q * new_t);
        std::tie(r, new_r) = std::make_pair(new_r, r - q * new_r);
    }
    if (t < 0)
        t += p;
    return static_cast<std::uint32_t>(t);
}

RrefResult rref(const Matrix& m, std::uint32_t p)
{
    Matrix a = m;
    const std::size_t rows = a.rows();
    const std::size_t cols = a.cols();
    std::vector<std::size_t> pivots;
    std::size_t lead = 0;
    for (std::size_t c = 0; c < cols && lead < rows; ++c) {
        std::size_t pr = lead;
        while (pr < rows && a(pr, c) == 0)
            ++pr;
        if (pr == rows)
            continue;
        if (pr != lead)
            for (std::size_t j = 0; j < cols; ++j)
                std::swap(a(pr, j), a(lead, j));
        const std::uint64_t inv = inverse_mod(a(lead, c), p);
        for (std::size_t j = c; j < cols; ++j)
            a(lead, j) = static_cast<std::uint32_t>(a(lead, j) * inv % p);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == lead || a(i, c) == 0)
                continue;
            const std::uint64_t f = p - a(i, c);
            for (std::size_t j = c; j < cols; ++j)
                a(i, j) = static_cast<std::uint32_t>((a(i, j) + f * a(lead, j)) % p);
        }
        pivots.push_back(c);
        ++lead;
    }
    Matrix reduced(0, cols);
    for (std::size_t i = 0; i < pivots.size(); ++i)
        reduced.append_row(a.row(i));
    return {std::move(reduced), std::move(pivots)};
}

std::size_t rank(const Matrix& m, std::uint32_t p)
{
    return rref(m, p).rank();
}

Matrix nullspace(const Matrix& m, std::uint32_t p)
{
    const std::size_t n = m.cols();
    const RrefResult r = rref(m, p);
    std::vector<bool> is_pivot(n, false);
    for (auto c : r.pivots)
        is_pivot[c] = true;

    Matrix basis(0, n);
    std::vector<std::uint32_t> v(n);
    for (std::size_t free = 0; free < n; ++free) {
        if (is_pivot[free])
            continue;
        std::fill(v.begin(), v.end(), 0);
        v[free] = 1;
        for (std::size_t i = 0; i < r.pivots.size(); ++i) {
            const std::uint32_t x = r.reduced(i, free);
            v[r.pivots[i]] = x == 0 ? 0 : p - x;
        }
        basis.append_row(v);
    }
    if (basis.rows() == 0)
        return basis;
    return rref(basis, p).reduced;
}

bool same_row_space(const Matrix& a, const Matrix& b, std::uint32_t p)
{
    if (a.cols() != b.cols())
        return false;
    RrefResult ra = rref(a, p);
    RrefResult rb = rref(b, p);
    return ra.pivots == rb.pivots && ra.reduced == rb.reduced;
}

} // namespace abcodes
