#include "dblpt/modular.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace dblpt;

namespace {

// Rank by enumerating every subset of rows and testing each for
// independence with exhaustive coefficient search over a tiny field.
std::size_t brute_rank(const std::vector<std::vector<std::uint64_t>>& rows, std::uint64_t p)
{
    const std::size_t n = rows.size();
    const std::size_t cols = rows.empty() ? 0 : rows[0].size();
    std::size_t best = 0;
    for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
        std::vector<std::size_t> chosen;
        for (std::size_t i = 0; i < n; ++i) {
            if (mask & (1U << i)) {
                chosen.push_back(i);
            }
        }
        if (chosen.size() <= best) {
            continue;
        }
        // Independent iff the only combination giving zero is trivial.
        bool independent = true;
        std::vector<std::uint64_t> coeff(chosen.size(), 0);
        while (independent) {
            std::size_t k = 0;
            while (k < coeff.size() && ++coeff[k] == p) {
                coeff[k++] = 0;
            }
            if (k == coeff.size()) {
                break;
            }
            bool zero = true;
            for (std::size_t c = 0; c < cols && zero; ++c) {
                std::uint64_t acc = 0;
                for (std::size_t t = 0; t < chosen.size(); ++t) {
                    acc = (acc + coeff[t] * rows[chosen[t]][c]) % p;
                }
                zero = acc == 0;
            }
            independent = !zero;
        }
        if (independent) {
            best = chosen.size();
        }
    }
    return best;
}

} // namespace

TEST(PrimeField, Arithmetic)
{
    const PrimeField f(1000003);
    EXPECT_EQ(f.mul(f.inv(12345), 12345), 1U);
    EXPECT_EQ(f.sub(3, 5), 1000001U);
    EXPECT_EQ(f.pow(2, 20), 1048576U % 1000003U);
    EXPECT_TRUE(PrimeField::is_prime(1000033));
    EXPECT_FALSE(PrimeField::is_prime(1000001));
    EXPECT_THROW(PrimeField(1000001), error);
    EXPECT_THROW(PrimeField(std::uint64_t{1} << 32), error);
}

TEST(ModMatrix, RankAgainstExhaustiveSearch)
{
    std::mt19937_64 rng(42);
    for (std::uint64_t p : {2ULL, 3ULL, 5ULL}) {
        const PrimeField f(p);
        for (int trial = 0; trial < 60; ++trial) {
            const std::size_t rows = 1 + rng() % 5;
            const std::size_t cols = 1 + rng() % 5;
            std::vector<std::vector<std::uint64_t>> raw(rows, std::vector<std::uint64_t>(cols));
            ModMatrix m(rows, cols);
            for (std::size_t i = 0; i < rows; ++i) {
                for (std::size_t j = 0; j < cols; ++j) {
                    // Sparse entries make rank deficiency common.
                    raw[i][j] = rng() % 3 == 0 ? rng() % p : 0;
                    m.at(i, j) = raw[i][j];
                }
            }
            ASSERT_EQ(rank(m, f), brute_rank(raw, p)) << "p=" << p << " trial " << trial;
        }
    }
}

TEST(ModMatrix, LazyReductionWithLargePrime)
{
    // Near 2^31 the lazy budget is tiny, exercising the periodic reductions.
    const PrimeField big(2147483647);
    const PrimeField small(1000003);
    EXPECT_LT(big.lazy_budget(), 5U);
    std::mt19937_64 rng(7);
    const std::size_t n = 40;
    ModMatrix a(n, n);
    ModMatrix b(n, n);
    // Rank-25 product of random 40x25 and 25x40 factors.
    std::vector<std::vector<std::uint64_t>> left(n, std::vector<std::uint64_t>(25));
    std::vector<std::vector<std::uint64_t>> right(25, std::vector<std::uint64_t>(n));
    for (auto& row : left) {
        for (auto& v : row) {
            v = rng() % 1000;
        }
    }
    for (auto& row : right) {
        for (auto& v : row) {
            v = rng() % 1000;
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            std::uint64_t acc = 0;
            for (std::size_t k = 0; k < 25; ++k) {
                acc += left[i][k] * right[k][j];
            }
            a.at(i, j) = acc % big.modulus();
            b.at(i, j) = acc % small.modulus();
        }
    }
    EXPECT_EQ(rank(a, big), 25U);
    EXPECT_EQ(rank(b, small), 25U);
}

TEST(ModMatrix, KernelIsAnnihilatedAndHasComplementaryDimension)
{
    const PrimeField f(1000003);
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t rows = 1 + rng() % 8;
        const std::size_t cols = 1 + rng() % 8;
        ModMatrix m(rows, cols);
        for (std::size_t i = 0; i < rows; ++i) {
            for (std::size_t j = 0; j < cols; ++j) {
                m.at(i, j) = rng() % 4 == 0 ? rng() % f.modulus() : 0;
            }
        }
        const auto basis = kernel(m, f);
        ASSERT_EQ(basis.size() + rank(m, f), cols);
        for (const auto& v : basis) {
            for (std::size_t i = 0; i < rows; ++i) {
                std::uint64_t acc = 0;
                for (std::size_t j = 0; j < cols; ++j) {
                    acc = f.add(acc, f.mul(m.at(i, j), v[j]));
                }
                ASSERT_EQ(acc, 0U);
            }
        }
        ModMatrix stacked(0, cols);
        for (const auto& v : basis) {
            stacked.append_row(v);
        }
        if (!basis.empty()) {
            ASSERT_EQ(rank(stacked, f), basis.size());
        }
    }
}
