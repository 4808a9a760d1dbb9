#pragma once

#include "dblpt/error.hpp"

#include <cstddef>
#include <cstdint>
#include <limits>
#include <string>
#include <utility>
#include <vector>

namespace dblpt {

/// Arithmetic in Z/p for a prime p < 2^31.
class PrimeField {
public:
    explicit PrimeField(std::uint64_t p) : p_(p)
    {
        if (p < 2 || p >= (std::uint64_t{1} << 31) || !is_prime(p)) {
            throw error(errc::invalid_config, std::to_string(p) + " is not a prime below 2^31");
        }
    }

    static bool is_prime(std::uint64_t n) noexcept
    {
        if (n < 2) {
            return false;
        }
        for (std::uint64_t d = 2; d * d <= n; ++d) {
            if (n % d == 0) {
                return false;
            }
        }
        return true;
    }

    std::uint64_t modulus() const noexcept { return p_; }

    std::uint64_t reduce(std::uint64_t a) const noexcept { return a % p_; }
    std::uint64_t add(std::uint64_t a, std::uint64_t b) const noexcept { return (a + b) % p_; }
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const noexcept { return (a + p_ - b) % p_; }
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const noexcept { return (a * b) % p_; }
    std::uint64_t neg(std::uint64_t a) const noexcept { return a == 0 ? 0 : p_ - a; }

    std::uint64_t pow(std::uint64_t a, std::uint64_t e) const noexcept
    {
        std::uint64_t result = 1;
        a %= p_;
        while (e > 0) {
            if (e & 1U) {
                result = mul(result, a);
            }
            a = mul(a, a);
            e >>= 1U;
        }
        return result;
    }

    std::uint64_t inv(std::uint64_t a) const noexcept { return pow(a, p_ - 2); }

    /// Number of unreduced `x += (p-1)*(p-1)` updates that fit in 64 bits on
    /// top of a reduced value.
    std::uint64_t lazy_budget() const noexcept
    {
        const std::uint64_t sq = (p_ - 1) * (p_ - 1);
        return (std::numeric_limits<std::uint64_t>::max() - p_) / sq;
    }

private:
    std::uint64_t p_;
};

/// Dense row-major matrix over Z/p. Entries are kept reduced between calls.
class ModMatrix {
public:
    ModMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) { }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    std::uint64_t& at(std::size_t i, std::size_t j) noexcept { return data_[i * cols_ + j]; }
    std::uint64_t at(std::size_t i, std::size_t j) const noexcept { return data_[i * cols_ + j]; }

    std::uint64_t* row(std::size_t i) noexcept { return data_.data() + i * cols_; }
    const std::uint64_t* row(std::size_t i) const noexcept { return data_.data() + i * cols_; }

    void append_row(const std::vector<std::uint64_t>& values)
    {
        data_.insert(data_.end(), values.begin(), values.end());
        ++rows_;
    }

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<std::uint64_t> data_;
};

/// Rank by forward elimination. Row updates are accumulated without
/// reduction for as long as 64-bit headroom allows.
inline std::size_t rank(ModMatrix m, const PrimeField& field)
{
    const std::uint64_t p = field.modulus();
    const std::uint64_t budget = field.lazy_budget();
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();

    std::size_t rk = 0;
    std::uint64_t pending = 0;
    for (std::size_t col = 0; col < cols && rk < rows; ++col) {
        std::size_t pivot = rows;
        for (std::size_t i = rk; i < rows; ++i) {
            m.at(i, col) %= p;
            if (m.at(i, col) != 0) {
                pivot = i;
                break;
            }
        }
        if (pivot == rows) {
            continue;
        }
        if (pending + 1 > budget) {
            for (std::size_t i = rk; i < rows; ++i) {
                auto* r = m.row(i);
                for (std::size_t c = col; c < cols; ++c) {
                    r[c] %= p;
                }
            }
            pending = 0;
        }
        if (pivot != rk) {
            auto* a = m.row(pivot);
            auto* b = m.row(rk);
            for (std::size_t c = col; c < cols; ++c) {
                std::swap(a[c], b[c]);
            }
        }
        auto* prow = m.row(rk);
        const std::uint64_t scale = field.inv(prow[col]);
        for (std::size_t c = col; c < cols; ++c) {
            prow[c] = (prow[c] % p) * scale % p;
        }
        for (std::size_t i = rk + 1; i < rows; ++i) {
            auto* r = m.row(i);
            const std::uint64_t f = r[col] % p;
            r[col] = 0;
            if (f == 0) {
                continue;
            }
            const std::uint64_t nf = p - f;
            for (std::size_t c = col + 1; c < cols; ++c) {
                r[c] += nf * prow[c];
            }
        }
        ++pending;
        ++rk;
    }
    return rk;
}

/// Basis of {v : m v = 0}, one vector per free column of the reduced row
/// echelon form.
inline std::vector<std::vector<std::uint64_t>> kernel(ModMatrix m, const PrimeField& field)
{
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    std::vector<std::size_t> pivot_cols;

    std::size_t rk = 0;
    for (std::size_t col = 0; col < cols && rk < rows; ++col) {
        std::size_t pivot = rows;
        for (std::size_t i = rk; i < rows; ++i) {
            if (m.at(i, col) != 0) {
                pivot = i;
                break;
            }
        }
        if (pivot == rows) {
            continue;
        }
        if (pivot != rk) {
            for (std::size_t c = 0; c < cols; ++c) {
                std::swap(m.at(pivot, c), m.at(rk, c));
            }
        }
        const std::uint64_t scale = field.inv(m.at(rk, col));
        for (std::size_t c = col; c < cols; ++c) {
            m.at(rk, c) = field.mul(m.at(rk, c), scale);
        }
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == rk || m.at(i, col) == 0) {
                continue;
            }
            const std::uint64_t f = m.at(i, col);
            for (std::size_t c = col; c < cols; ++c) {
                m.at(i, c) = field.sub(m.at(i, c), field.mul(f, m.at(rk, c)));
            }
        }
        pivot_cols.push_back(col);
        ++rk;
    }

    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivot_cols) {
        is_pivot[c] = true;
    }
    std::vector<std::vector<std::uint64_t>> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) {
            continue;
        }
        std::vector<std::uint64_t> v(cols, 0);
        v[free] = 1;
        for (std::size_t k = 0; k < pivot_cols.size(); ++k) {
            v[pivot_cols[k]] = field.neg(m.at(k, free));
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

} // namespace dblpt
