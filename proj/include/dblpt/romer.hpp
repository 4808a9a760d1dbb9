#pragma once

#include "dblpt/partition.hpp"
#include "dblpt/resolution.hpp"
#include "dblpt/shifts.hpp"

#include <array>
#include <optional>

namespace dblpt {

struct BettiTotals {
    long b1 = 0;
    long b2 = 0;
    long b3 = 0;

    friend bool operator==(const BettiTotals&, const BettiTotals&) = default;
};

inline long binom2(long n) { return n * (n - 1) / 2; }

/// Total Betti numbers of S/I_Z as functions of d = d(λ) alone.
inline BettiTotals betti_totals(const Partition& lambda)
{
    const long d = descent_count(lambda);
    const long corners = binom2(d + 1);
    return {2 * d + 3 + corners, 2 * d + 2 + 2 * corners, corners};
}

struct MaxShifts {
    int m1 = 0;
    int m2 = 0;
    std::optional<int> m3;

    friend bool operator==(const MaxShifts&, const MaxShifts&) = default;
};

/// Largest total degree x + y among the shifts of each free module.
inline MaxShifts max_total_shifts(const FreeResolution& res)
{
    return {res.s0.max_total().value_or(0), res.s1.max_total().value_or(0), res.s2.max_total()};
}

struct RomerReport {
    int d = 0;
    BettiTotals beta;
    MaxShifts maxshift;
    /// Right-hand sides ½ M2 M3, M1 M3, ½ M1 M2; unset in the
    /// Cohen-Macaulay case.
    std::optional<std::array<double, 3>> bounds;
    /// d == 0: the Cohen-Macaulay codimension 2 case, where the bound is a
    /// known theorem and is not recomputed here.
    bool cohen_macaulay = false;
    bool pass = false;
};

/// β_i <= (1 / ((i-1)! (3-i)!)) Π_{j != i} M_j for i = 1, 2, 3.
inline RomerReport romer_check(const Partition& lambda, const FreeResolution& res)
{
    RomerReport report;
    report.d = descent_count(lambda);
    report.beta = betti_totals(lambda);
    report.maxshift = max_total_shifts(res);
    if (report.d == 0) {
        report.cohen_macaulay = true;
        report.pass = true;
        return report;
    }
    const long m1 = report.maxshift.m1;
    const long m2 = report.maxshift.m2;
    const long m3 = report.maxshift.m3.value_or(0);
    report.bounds = std::array<double, 3>{0.5 * static_cast<double>(m2 * m3), static_cast<double>(m1 * m3),
                                          0.5 * static_cast<double>(m1 * m2)};
    // Doubled to stay in integers.
    report.pass = 2 * report.beta.b1 <= m2 * m3 && report.beta.b2 <= m1 * m3 && 2 * report.beta.b3 <= m1 * m2;
    return report;
}

inline RomerReport romer_check(const Partition& lambda) { return romer_check(lambda, resolve(lambda)); }

/// Lower bounds on M1, M2, M3 that hold whenever d(λ) > 0:
/// 2λ_1, 2λ_1 + 1 and λ_1 + λ_{i*} + 3 with i* the first descent.
inline std::optional<std::array<int, 3>> max_shift_lower_bounds(const Partition& lambda)
{
    const auto istar = first_descent(lambda);
    if (!istar) {
        return std::nullopt;
    }
    const int top = lambda.largest();
    return std::array<int, 3>{2 * top, 2 * top + 1, top + lambda.part(*istar) + 3};
}

} // namespace dblpt
