#pragma once

#include "dblpt/error.hpp"
#include "dblpt/partition.hpp"
#include "dblpt/shifts.hpp"

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

namespace dblpt {

/// Fat points supported on a grid R_1..R_r x Q_1..Q_t of P1 x P1. Entry
/// (i,j) is the multiplicity of R_i x Q_j, with 0 meaning the point is absent.
class FatPointScheme {
public:
    /// Throws unless `mult` is a non-empty rectangular matrix with entries in
    /// {0,1,2} and no all-zero row or column.
    explicit FatPointScheme(std::vector<std::vector<int>> mult) : mult_(std::move(mult))
    {
        if (mult_.empty() || mult_.front().empty()) {
            throw error(errc::malformed_scheme, "a scheme needs at least one point");
        }
        const std::size_t cols = mult_.front().size();
        std::vector<bool> col_used(cols, false);
        for (std::size_t i = 0; i < mult_.size(); ++i) {
            if (mult_[i].size() != cols) {
                throw error(errc::malformed_scheme, "row " + std::to_string(i + 1) + " has the wrong length");
            }
            bool row_used = false;
            for (std::size_t j = 0; j < cols; ++j) {
                const int m = mult_[i][j];
                if (m < 0 || m > 2) {
                    throw error(errc::invalid_multiplicity,
                                "entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1)
                                    + ") is " + std::to_string(m) + ", expected 0, 1 or 2");
                }
                if (m > 0) {
                    row_used = true;
                    col_used[j] = true;
                }
            }
            if (!row_used) {
                throw error(errc::malformed_scheme, "row " + std::to_string(i + 1) + " has no point");
            }
        }
        for (std::size_t j = 0; j < cols; ++j) {
            if (!col_used[j]) {
                throw error(errc::malformed_scheme, "column " + std::to_string(j + 1) + " has no point");
            }
        }
    }

    int rows() const noexcept { return static_cast<int>(mult_.size()); }
    int cols() const noexcept { return static_cast<int>(mult_.front().size()); }

    /// 1-based.
    int mult(int i, int j) const
    {
        return mult_.at(static_cast<std::size_t>(i - 1)).at(static_cast<std::size_t>(j - 1));
    }

    const std::vector<std::vector<int>>& matrix() const noexcept { return mult_; }

    /// Σ binom(m+1, 2) over all points.
    int degree() const noexcept
    {
        int d = 0;
        for (const auto& row : mult_) {
            for (int m : row) {
                d += m * (m + 1) / 2;
            }
        }
        return d;
    }

    bool is_reduced() const noexcept
    {
        for (const auto& row : mult_) {
            for (int m : row) {
                if (m > 1) {
                    return false;
                }
            }
        }
        return true;
    }

    friend bool operator==(const FatPointScheme&, const FatPointScheme&) = default;

private:
    std::vector<std::vector<int>> mult_;
};

/// Double points on the Ferrers diagram of λ.
inline FatPointScheme double_points_of(const Partition& lambda)
{
    std::vector<std::vector<int>> m(static_cast<std::size_t>(lambda.rows()),
                                    std::vector<int>(static_cast<std::size_t>(lambda.largest()), 0));
    for (int i = 1; i <= lambda.rows(); ++i) {
        for (int j = 1; j <= lambda.part(i); ++j) {
            m[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = 2;
        }
    }
    return FatPointScheme(std::move(m));
}

struct AlphaBeta {
    Partition alpha;
    Partition beta;
};

namespace detail {

// a_{k} = Σ (m - k)_+ for k = 0 .. max(m) - 1, over one ruling line.
inline void append_line_statistics(const std::vector<int>& line, std::vector<int>& out)
{
    const int top = *std::max_element(line.begin(), line.end());
    for (int k = 0; k < top; ++k) {
        int s = 0;
        for (int m : line) {
            s += std::max(m - k, 0);
        }
        out.push_back(s);
    }
}

} // namespace detail

inline AlphaBeta alpha_beta_of(const FatPointScheme& z)
{
    std::vector<int> alpha;
    std::vector<int> beta;
    for (const auto& row : z.matrix()) {
        detail::append_line_statistics(row, alpha);
    }
    for (int j = 0; j < z.cols(); ++j) {
        std::vector<int> column;
        for (const auto& row : z.matrix()) {
            column.push_back(row[static_cast<std::size_t>(j)]);
        }
        detail::append_line_statistics(column, beta);
    }
    return {sorted_partition(std::move(alpha)), sorted_partition(std::move(beta))};
}

/// ACM iff conjugate(α_Z) == β_Z.
inline bool is_acm(const FatPointScheme& z)
{
    const auto ab = alpha_beta_of(z);
    return conjugate(ab.alpha) == ab.beta;
}

/// Resolution of an ACM fat point scheme from its α_Z = (α_1..α_m):
///   s0 = {(m,0),(0,α_1)} ∪ {(i-1,α_i)     | α_i < α_{i-1}}
///   s1 = {(m,α_m)}       ∪ {(i-1,α_{i-1}) | α_i < α_{i-1}}
/// Only i >= 2 can be a descent.
inline FreeResolution acm_resolution(const Partition& alpha)
{
    const int m = alpha.rows();
    FreeResolution res;
    res.s0.add({m, 0});
    res.s0.add({0, alpha.part(1)});
    res.s1.add({m, alpha.part(m)});
    for (int i : descent_indices(alpha)) {
        res.s0.add({i - 1, alpha.part(i)});
        res.s1.add({i - 1, alpha.part(i - 1)});
    }
    return res;
}

/// Complete intersection of r x t reduced points.
inline FreeResolution ci_resolution(int r, int t)
{
    if (r < 1 || t < 1) {
        throw error(errc::non_positive_part, "complete intersection type must be positive");
    }
    FreeResolution res;
    res.s0.add({r, 0});
    res.s0.add({0, t});
    res.s1.add({r, t});
    return res;
}

} // namespace dblpt
