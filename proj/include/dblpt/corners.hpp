#pragma once

#include "dblpt/partition.hpp"
#include "dblpt/shifts.hpp"

#include <algorithm>
#include <compare>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace dblpt {

/// Small dense integer matrix with 1-based accessors.
class DegreeMatrix {
public:
    DegreeMatrix(int rows, int cols, int fill = 0)
        : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows * cols), fill)
    { }

    int rows() const noexcept { return rows_; }
    int cols() const noexcept { return cols_; }

    int operator()(int i, int j) const { return data_.at(index(i, j)); }
    int& operator()(int i, int j) { return data_.at(index(i, j)); }

    /// Row-major nested copy.
    std::vector<std::vector<int>> to_rows() const
    {
        std::vector<std::vector<int>> out(static_cast<std::size_t>(rows_));
        for (int i = 1; i <= rows_; ++i) {
            for (int j = 1; j <= cols_; ++j) {
                out[static_cast<std::size_t>(i - 1)].push_back((*this)(i, j));
            }
        }
        return out;
    }

    /// Σ of column j over rows [first, last].
    int column_sum(int j, int first, int last) const
    {
        int s = 0;
        for (int i = first; i <= last; ++i) {
            s += (*this)(i, j);
        }
        return s;
    }

    /// Σ of row i over columns [first, last].
    int row_sum(int i, int first, int last) const
    {
        int s = 0;
        for (int j = first; j <= last; ++j) {
            s += (*this)(i, j);
        }
        return s;
    }

    friend bool operator==(const DegreeMatrix&, const DegreeMatrix&) = default;

private:
    std::size_t index(int i, int j) const
    {
        if (i < 1 || i > rows_ || j < 1 || j > cols_) {
            throw std::out_of_range("matrix position (" + std::to_string(i) + "," + std::to_string(j)
                                    + ") outside " + std::to_string(rows_) + "x" + std::to_string(cols_));
        }
        return static_cast<std::size_t>((i - 1) * cols_ + (j - 1));
    }

    int rows_;
    int cols_;
    std::vector<int> data_;
};

/// Matrix position (row, col), 1-based. Ordered lexicographically.
struct Corner {
    int row = 0;
    int col = 0;

    friend auto operator<=>(const Corner&, const Corner&) = default;
};

inline std::string to_string(const Corner& c)
{
    return "(" + std::to_string(c.row) + "," + std::to_string(c.col) + ")";
}

/// Exponents of a product of ruling forms L_{R_1}^{e_1} ... L_{Q_1}^{f_1} ...
struct FormExponents {
    std::vector<int> rexp;
    std::vector<int> qexp;
    Bidegree bidegree;

    friend bool operator==(const FormExponents&, const FormExponents&) = default;
};

struct CornerForm {
    Corner corner;
    FormExponents form;
};

struct LedgerEntry {
    Corner corner;
    int u = 0;
    int v = 0;
    int a = 0;
    int b = 0;
    DegreeMatrix matrix_after;
};

using CornerLedger = std::vector<LedgerEntry>;

/// M_λ: 2 on the Ferrers diagram of λ, 1 elsewhere in the r x λ_1 box.
inline DegreeMatrix degree_matrix_z(const Partition& lambda)
{
    DegreeMatrix m(lambda.rows(), lambda.largest(), 1);
    for (int i = 1; i <= lambda.rows(); ++i) {
        for (int j = 1; j <= lambda.part(i); ++j) {
            m(i, j) = 2;
        }
    }
    return m;
}

/// M_λ bordered by a row and a column of ones.
inline DegreeMatrix degree_matrix_y(const Partition& lambda)
{
    DegreeMatrix m(lambda.rows() + 1, lambda.largest() + 1, 1);
    for (int i = 1; i <= lambda.rows(); ++i) {
        for (int j = 1; j <= lambda.part(i); ++j) {
            m(i, j) = 2;
        }
    }
    return m;
}

namespace detail {

inline void sort_descending(std::vector<Corner>& cs)
{
    std::sort(cs.begin(), cs.end(), std::greater<>());
    cs.erase(std::unique(cs.begin(), cs.end()), cs.end());
}

} // namespace detail

/// {(i, λ_i + 1) : λ_i < λ_{i-1}}, lex descending.
inline std::vector<Corner> base_corners(const Partition& lambda)
{
    std::vector<Corner> out;
    for (int i : descent_indices(lambda)) {
        out.push_back({i, lambda.part(i) + 1});
    }
    detail::sort_descending(out);
    return out;
}

/// Base corners together with (i, l) for every pair of base corners
/// (i, j), (k, l) with i > k; lex descending.
inline std::vector<Corner> corners(const Partition& lambda)
{
    const auto base = base_corners(lambda);
    std::vector<Corner> out = base;
    for (const auto& lower : base) {
        for (const auto& upper : base) {
            if (lower.row > upper.row) {
                out.push_back({lower.row, upper.col});
            }
        }
    }
    detail::sort_descending(out);
    return out;
}

/// Positions of the minimal generators of the completion inside M_Y,
/// lex descending.
inline std::vector<Corner> outside_corners(const Partition& lambda)
{
    const int r = lambda.rows();
    const int t = lambda.largest();
    std::vector<Corner> out{{r + 1, 1}, {1, t + 1}, {r + 1, t + 1}};
    for (const auto& c : base_corners(lambda)) {
        out.push_back({r + 1, c.col});
        out.push_back({c.row, t + 1});
    }
    detail::sort_descending(out);
    return out;
}

/// Form relative to position (i, j) of `m`: exponents read from the column
/// above and the row to the left.
inline FormExponents form_at(const DegreeMatrix& m, Corner c)
{
    FormExponents f;
    for (int a = 1; a < c.row; ++a) {
        f.rexp.push_back(m(a, c.col));
    }
    for (int b = 1; b < c.col; ++b) {
        f.qexp.push_back(m(c.row, b));
    }
    f.bidegree = {m.column_sum(c.col, 1, c.row - 1), m.row_sum(c.row, 1, c.col - 1)};
    return f;
}

/// Minimal generators G of the completion, one per outside corner.
inline std::vector<CornerForm> generator_exponents_y(const Partition& lambda)
{
    const auto m = degree_matrix_y(lambda);
    std::vector<CornerForm> out;
    for (const auto& c : outside_corners(lambda)) {
        out.push_back({c, form_at(m, c)});
    }
    return out;
}

/// The forms F relative to the corners, read from the pristine M_λ.
inline std::vector<CornerForm> generator_exponents_z(const Partition& lambda)
{
    const auto m = degree_matrix_z(lambda);
    std::vector<CornerForm> out;
    for (const auto& c : corners(lambda)) {
        out.push_back({c, form_at(m, c)});
    }
    return out;
}

/// Sweeps the corners from largest to smallest. Each step reads u, v, a, b
/// from the current matrix and then zeroes every position (i', j') with
/// i' >= i and j' >= j.
inline CornerLedger corner_ledger(const Partition& lambda)
{
    const DegreeMatrix pristine = degree_matrix_z(lambda);
    DegreeMatrix current = pristine;
    const int r = current.rows();
    const int t = current.cols();

    CornerLedger ledger;
    for (const auto& c : corners(lambda)) {
        LedgerEntry e{c, 0, 0, 0, 0, current};
        e.u = current.column_sum(c.col, 1, c.row - 1);
        e.v = current.row_sum(c.row, 1, c.col - 1);
        e.a = current.column_sum(c.col, c.row, r);
        e.b = current.row_sum(c.row, c.col, t);

        // The zeroed region never reaches above or left of a later corner.
        if (e.u != pristine.column_sum(c.col, 1, c.row - 1)
            || e.v != pristine.row_sum(c.row, 1, c.col - 1)) {
            throw std::logic_error("ledger: u/v at corner " + to_string(c)
                                   + " differ between working and pristine matrix");
        }

        for (int i = c.row; i <= r; ++i) {
            for (int j = c.col; j <= t; ++j) {
                current(i, j) = 0;
            }
        }
        e.matrix_after = current;
        ledger.push_back(std::move(e));
    }
    return ledger;
}

} // namespace dblpt
