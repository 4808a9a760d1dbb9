#pragma once

#include "dblpt/error.hpp"

#include <algorithm>
#include <cstddef>
#include <functional>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace dblpt {

/// A weakly decreasing tuple of positive integers.
///
/// Indices exposed by the free functions below are 1-based, i.e. part(1) is
/// the largest part.
class Partition {
public:
    /// Validates and wraps `raw`. Throws dblpt::error on an empty list, a part
    /// below 1, or an increase between consecutive parts.
    static Partition from(std::span<const int> raw)
    {
        if (raw.empty()) {
            throw error(errc::empty_input, "a partition needs at least one part");
        }
        for (std::size_t k = 0; k < raw.size(); ++k) {
            if (raw[k] < 1) {
                throw error(errc::non_positive_part,
                            "part " + std::to_string(k + 1) + " is " + std::to_string(raw[k]));
            }
            if (k > 0 && raw[k] > raw[k - 1]) {
                throw error(errc::not_weakly_decreasing,
                            "part " + std::to_string(k + 1) + " exceeds part " + std::to_string(k));
            }
        }
        return Partition(std::vector<int>(raw.begin(), raw.end()));
    }

    static Partition from(std::initializer_list<int> raw)
    {
        return from(std::span<const int>(raw.begin(), raw.size()));
    }

    const std::vector<int>& parts() const noexcept { return parts_; }
    int rows() const noexcept { return static_cast<int>(parts_.size()); }
    int largest() const noexcept { return parts_.front(); }

    /// 1-based access.
    int part(int i) const { return parts_.at(static_cast<std::size_t>(i - 1)); }

    int total() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), 0); }

    bool is_constant() const noexcept { return parts_.front() == parts_.back(); }

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition&, const Partition&) = default;

private:
    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) { }

    std::vector<int> parts_;
};

inline Partition validate_partition(std::span<const int> raw) { return Partition::from(raw); }

/// Builds a partition from arbitrary nonnegative values by sorting them
/// non-increasingly and dropping zeros.
inline Partition sorted_partition(std::vector<int> values)
{
    std::erase(values, 0);
    std::sort(values.begin(), values.end(), std::greater<>());
    return Partition::from(values);
}

/// conjugate(λ)_i = #{j : λ_j >= i}
inline Partition conjugate(const Partition& lambda)
{
    std::vector<int> out(static_cast<std::size_t>(lambda.largest()), 0);
    for (int p : lambda.parts()) {
        for (int i = 0; i < p; ++i) {
            ++out[static_cast<std::size_t>(i)];
        }
    }
    return Partition::from(out);
}

/// Number of indices i >= 2 with λ_i < λ_{i-1}.
inline int descent_count(const Partition& lambda)
{
    int d = 0;
    for (int i = 2; i <= lambda.rows(); ++i) {
        if (lambda.part(i) < lambda.part(i - 1)) {
            ++d;
        }
    }
    return d;
}

/// Indices i >= 2 with λ_i < λ_{i-1}, ascending.
inline std::vector<int> descent_indices(const Partition& lambda)
{
    std::vector<int> out;
    for (int i = 2; i <= lambda.rows(); ++i) {
        if (lambda.part(i) < lambda.part(i - 1)) {
            out.push_back(i);
        }
    }
    return out;
}

inline std::optional<int> first_descent(const Partition& lambda)
{
    for (int i = 2; i <= lambda.rows(); ++i) {
        if (lambda.part(i) < lambda.part(i - 1)) {
            return i;
        }
    }
    return std::nullopt;
}

/// Every partition with at most `max_rows` parts and largest part at most
/// `max_width`, in lexicographically increasing order of the part lists.
inline std::vector<Partition> enumerate_partitions(int max_rows, int max_width)
{
    std::vector<Partition> out;
    std::vector<int> current;
    auto extend = [&](auto&& self, int cap) -> void {
        if (!current.empty()) {
            out.push_back(Partition::from(current));
        }
        if (static_cast<int>(current.size()) == max_rows) {
            return;
        }
        for (int p = 1; p <= cap; ++p) {
            current.push_back(p);
            self(self, p);
            current.pop_back();
        }
    };
    extend(extend, max_width);
    std::sort(out.begin(), out.end(),
              [](const Partition& a, const Partition& b) { return a.parts() < b.parts(); });
    return out;
}

inline std::string to_string(const Partition& lambda)
{
    std::string s = "(";
    for (std::size_t k = 0; k < lambda.parts().size(); ++k) {
        if (k > 0) {
            s += ',';
        }
        s += std::to_string(lambda.parts()[k]);
    }
    return s + ")";
}

} // namespace dblpt
