#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace dblpt {

/// Bidegree (x, y) of a bihomogeneous form, or of a shift S(-x,-y).
struct Bidegree {
    int x = 0;
    int y = 0;

    int total() const noexcept { return x + y; }

    /// Strict domination in both coordinates.
    bool strictly_dominates(const Bidegree& o) const noexcept { return x > o.x && y > o.y; }

    friend auto operator<=>(const Bidegree&, const Bidegree&) = default;
};

inline std::string to_string(const Bidegree& d)
{
    return "(" + std::to_string(d.x) + "," + std::to_string(d.y) + ")";
}

/// Multiset of bidegrees. Repetitions are significant; storage order is
/// insertion order and only sorted() is canonical.
class ShiftMultiset {
public:
    ShiftMultiset() = default;
    ShiftMultiset(std::initializer_list<Bidegree> init) : entries_(init) { }
    explicit ShiftMultiset(std::vector<Bidegree> entries) : entries_(std::move(entries)) { }

    void add(Bidegree d) { entries_.push_back(d); }

    void merge(const ShiftMultiset& other)
    {
        entries_.insert(entries_.end(), other.entries_.begin(), other.entries_.end());
    }

    std::size_t size() const noexcept { return entries_.size(); }
    bool empty() const noexcept { return entries_.empty(); }

    const std::vector<Bidegree>& entries() const noexcept { return entries_; }

    /// Lexicographically ascending, repeats adjacent.
    std::vector<Bidegree> sorted() const
    {
        auto out = entries_;
        std::sort(out.begin(), out.end());
        return out;
    }

    std::size_t count(Bidegree d) const
    {
        return static_cast<std::size_t>(std::count(entries_.begin(), entries_.end(), d));
    }

    /// True iff every entry of `other` occurs here at least as often.
    bool contains(const ShiftMultiset& other) const
    {
        auto mine = sorted();
        auto theirs = other.sorted();
        return std::includes(mine.begin(), mine.end(), theirs.begin(), theirs.end());
    }

    int sum_x() const noexcept
    {
        int s = 0;
        for (const auto& d : entries_) {
            s += d.x;
        }
        return s;
    }

    int sum_y() const noexcept
    {
        int s = 0;
        for (const auto& d : entries_) {
            s += d.y;
        }
        return s;
    }

    std::optional<int> max_total() const noexcept
    {
        std::optional<int> best;
        for (const auto& d : entries_) {
            if (!best || d.total() > *best) {
                best = d.total();
            }
        }
        return best;
    }

    friend bool operator==(const ShiftMultiset& a, const ShiftMultiset& b)
    {
        return a.sorted() == b.sorted();
    }

private:
    std::vector<Bidegree> entries_;
};

/// Shifts of a length <= 2 bigraded free resolution
///   0 -> F2 -> F1 -> F0 -> I -> 0,
/// with F_k = ⊕ S(-x,-y) over the entries of s_k.
struct FreeResolution {
    ShiftMultiset s0;
    ShiftMultiset s1;
    ShiftMultiset s2;

    /// |s0| - |s1| + |s2| == 1
    bool rank_balanced() const noexcept
    {
        return static_cast<long>(s0.size()) - static_cast<long>(s1.size())
                   + static_cast<long>(s2.size())
               == 1;
    }

    /// The alternating sums of x- and of y-components vanish.
    bool shift_sums_balanced() const noexcept
    {
        return s0.sum_x() - s1.sum_x() + s2.sum_x() == 0
               && s0.sum_y() - s1.sum_y() + s2.sum_y() == 0;
    }

    const ShiftMultiset& module(int k) const
    {
        switch (k) {
        case 0: return s0;
        case 1: return s1;
        default: return s2;
        }
    }

    friend bool operator==(const FreeResolution&, const FreeResolution&) = default;
};

} // namespace dblpt
