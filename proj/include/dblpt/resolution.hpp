#pragma once

#include "dblpt/completion.hpp"
#include "dblpt/corners.hpp"
#include "dblpt/error.hpp"
#include "dblpt/partition.hpp"
#include "dblpt/shifts.hpp"

#include <string>
#include <utility>
#include <vector>

namespace dblpt {

/// Adds the mapping cone contribution of one corner: the colon ideal is a
/// complete intersection of type (a, b), shifted by the form's degree (u, v).
inline void apply_corner(FreeResolution& res, const LedgerEntry& e)
{
    res.s0.add({e.u, e.v});
    res.s1.add({e.u + e.a, e.v});
    res.s1.add({e.u, e.v + e.b});
    res.s2.add({e.u + e.a, e.v + e.b});
}

/// Resolutions of I_0 = I_Y, I_1, ..., I_p = I_Z where p = |corners(λ)|.
inline std::vector<FreeResolution> resolve_steps(const Partition& lambda, const CornerLedger& ledger)
{
    std::vector<FreeResolution> steps;
    steps.reserve(ledger.size() + 1);
    steps.push_back(completion_resolution(lambda));
    for (const auto& e : ledger) {
        FreeResolution next = steps.back();
        apply_corner(next, e);
        steps.push_back(std::move(next));
    }
    return steps;
}

inline std::vector<FreeResolution> resolve_steps(const Partition& lambda)
{
    return resolve_steps(lambda, corner_ledger(lambda));
}

/// Bigraded shifts of the minimal free resolution of the double points on λ.
inline FreeResolution resolve(const Partition& lambda)
{
    FreeResolution res = completion_resolution(lambda);
    for (const auto& e : corner_ledger(lambda)) {
        apply_corner(res, e);
    }
    return res;
}

/// Type (a, b) of the complete intersection (I_{ℓ-1} : F_ℓ), 1 <= ℓ <= p.
inline std::pair<int, int> colon_ci_type(const Partition& lambda, int step)
{
    const auto ledger = corner_ledger(lambda);
    if (step < 1 || step > static_cast<int>(ledger.size())) {
        throw error(errc::step_out_of_range, "step " + std::to_string(step) + " not in [1, "
                                                 + std::to_string(ledger.size()) + "]");
    }
    const auto& e = ledger[static_cast<std::size_t>(step - 1)];
    return {e.a, e.b};
}

} // namespace dblpt
