#pragma once

#include "dblpt/partition.hpp"
#include "dblpt/scheme.hpp"
#include "dblpt/shifts.hpp"

#include <vector>

namespace dblpt {

/// The completion Y of the double points on λ: the double points plus a
/// simple point at every other node of the r x λ_1 grid.
inline FatPointScheme completion_scheme(const Partition& lambda)
{
    std::vector<std::vector<int>> m(static_cast<std::size_t>(lambda.rows()),
                                    std::vector<int>(static_cast<std::size_t>(lambda.largest()), 1));
    for (int i = 1; i <= lambda.rows(); ++i) {
        for (int j = 1; j <= lambda.part(i); ++j) {
            m[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = 2;
        }
    }
    return FatPointScheme(std::move(m));
}

/// α_Y = (λ_1+λ_1, ..., λ_1+λ_r, λ_1, ..., λ_r), sorted.
inline Partition completion_alpha(const Partition& lambda)
{
    std::vector<int> alpha;
    alpha.reserve(2 * lambda.parts().size());
    for (int p : lambda.parts()) {
        alpha.push_back(lambda.largest() + p);
    }
    for (int p : lambda.parts()) {
        alpha.push_back(p);
    }
    return sorted_partition(std::move(alpha));
}

/// Closed form for the resolution of the completion; each descent i of λ
/// contributes two generators and two syzygies.
inline FreeResolution completion_resolution(const Partition& lambda)
{
    const int r = lambda.rows();
    const int top = lambda.largest();
    const int last = lambda.part(r);

    FreeResolution res;
    res.s0.add({2 * r, 0});
    res.s0.add({r, top});
    res.s0.add({0, 2 * top});
    res.s1.add({2 * r, last});
    res.s1.add({r, top + last});
    for (int i : descent_indices(lambda)) {
        res.s0.add({i - 1, top + lambda.part(i)});
        res.s0.add({i + r - 1, lambda.part(i)});
        res.s1.add({i - 1, top + lambda.part(i - 1)});
        res.s1.add({i + r - 1, lambda.part(i - 1)});
    }
    return res;
}

} // namespace dblpt
