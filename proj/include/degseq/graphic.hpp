#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace degseq {

/// Single degree or bound value. Always nonnegative once validated.
using degree_t = std::int32_t;
/// Accumulator for sums of degrees; twice the width of degree_t.
using sum_t = std::int64_t;

/// A candidate degree sequence (d_1, ..., d_n), n >= 1, every entry >= 0.
/// Entries are kept in input order; the graphic tests sort internally.
class DegreeSequence {
public:
    explicit DegreeSequence(std::vector<degree_t> d) : d_(std::move(d)) {
        if (d_.empty())
            throw std::invalid_argument("degree sequence must have at least one entry");
        for (std::size_t i = 0; i < d_.size(); ++i)
            if (d_[i] < 0)
                throw std::invalid_argument("negative degree at position " + std::to_string(i));
    }
    DegreeSequence(std::initializer_list<degree_t> d) : DegreeSequence(std::vector<degree_t>(d)) {}

    std::size_t size() const noexcept { return d_.size(); }
    degree_t operator[](std::size_t i) const { return d_[i]; }
    std::span<const degree_t> values() const noexcept { return d_; }
    const std::vector<degree_t>& vector() const noexcept { return d_; }

    sum_t sum() const noexcept { return std::accumulate(d_.begin(), d_.end(), sum_t{0}); }
    bool even_sum() const noexcept { return sum() % 2 == 0; }

    friend bool operator==(const DegreeSequence&, const DegreeSequence&) = default;

private:
    std::vector<degree_t> d_;
};

namespace detail {

// Non-increasing order, ties by original position.
inline std::vector<degree_t> sorted_desc(std::span<const degree_t> d) {
    std::vector<degree_t> s(d.begin(), d.end());
    std::stable_sort(s.begin(), s.end(), std::greater<>{});
    return s;
}

// Erdos-Gallai slacks for t = 1..n of a non-increasing sequence, in O(n).
// slack[t-1] = t(t-1) + sum_{i>t} min(t, d_i) - sum_{i<=t} d_i.
inline std::vector<sum_t> slacks_of_sorted(std::span<const degree_t> s) {
    const std::size_t n = s.size();
    std::vector<sum_t> prefix(n + 1, 0);
    for (std::size_t i = 0; i < n; ++i)
        prefix[i + 1] = prefix[i] + s[i];

    std::vector<sum_t> out(n);
    // k = number of entries >= t; nonincreasing in t.
    std::size_t k = n;
    for (std::size_t t = 1; t <= n; ++t) {
        while (k > 0 && static_cast<sum_t>(s[k - 1]) < static_cast<sum_t>(t))
            --k;
        const auto tt = static_cast<sum_t>(t);
        sum_t tail;
        if (k <= t)
            tail = prefix[n] - prefix[t];
        else
            tail = tt * static_cast<sum_t>(k - t) + (prefix[n] - prefix[k]);
        out[t - 1] = tt * (tt - 1) + tail - prefix[t];
    }
    return out;
}

} // namespace detail

/// Right side minus left side of the Erdos-Gallai inequality at every t = 1..n,
/// after sorting d non-increasingly. Entry t-1 holds the slack at t.
inline std::vector<sum_t> eg_slacks(std::span<const degree_t> d) {
    return detail::slacks_of_sorted(detail::sorted_desc(d));
}
inline std::vector<sum_t> eg_slacks(const DegreeSequence& d) { return eg_slacks(d.values()); }

/// Slack of the Erdos-Gallai inequality at a single t, 1 <= t <= n.
inline sum_t eg_slack(const DegreeSequence& d, std::size_t t) {
    if (t < 1 || t > d.size())
        throw std::out_of_range("t=" + std::to_string(t) + " outside 1.." + std::to_string(d.size()));
    return eg_slacks(d)[t - 1];
}

/// Smallest t whose Erdos-Gallai inequality fails, if any. Parity is not checked.
inline std::optional<std::size_t> first_eg_violation(std::span<const degree_t> d) {
    const auto sl = eg_slacks(d);
    for (std::size_t t = 0; t < sl.size(); ++t)
        if (sl[t] < 0)
            return t + 1;
    return std::nullopt;
}

/// True iff d has even sum and satisfies every Erdos-Gallai inequality.
/// Runs in O(n log n). Entries larger than n-1 fail at t = 1.
inline bool is_graphic(std::span<const degree_t> d) {
    sum_t total = 0;
    for (auto x : d)
        total += x;
    if (total % 2 != 0)
        return false;
    return !first_eg_violation(d).has_value();
}
inline bool is_graphic(const DegreeSequence& d) { return is_graphic(d.values()); }

} // namespace degseq
