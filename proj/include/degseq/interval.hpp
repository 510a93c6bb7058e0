#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "degseq/graphic.hpp"

namespace degseq {

/// Componentwise box [A, B] of nonnegative integer sequences, 0 <= a_i <= b_i.
/// The universe of interest is every even-sum sequence inside the box.
class IntervalInstance {
public:
    IntervalInstance(std::vector<degree_t> a, std::vector<degree_t> b) : a_(std::move(a)), b_(std::move(b)) {
        if (a_.empty())
            throw std::invalid_argument("instance must have at least one coordinate");
        if (a_.size() != b_.size())
            throw std::invalid_argument("lower and upper bounds differ in length (" + std::to_string(a_.size()) +
                                        " vs " + std::to_string(b_.size()) + ")");
        for (std::size_t i = 0; i < a_.size(); ++i) {
            if (a_[i] < 0)
                throw std::invalid_argument("negative lower bound at position " + std::to_string(i));
            if (a_[i] > b_[i])
                throw std::invalid_argument("lower bound exceeds upper bound at position " + std::to_string(i));
        }
    }

    /// Degenerate box holding the single point a.
    static IntervalInstance point(std::vector<degree_t> a) {
        auto b = a;
        return IntervalInstance(std::move(a), std::move(b));
    }

    std::size_t size() const noexcept { return a_.size(); }
    std::span<const degree_t> lower() const noexcept { return a_; }
    std::span<const degree_t> upper() const noexcept { return b_; }
    degree_t a(std::size_t i) const { return a_[i]; }
    degree_t b(std::size_t i) const { return b_[i]; }

    /// A == B.
    bool is_fixed() const noexcept { return a_ == b_; }

    /// The even-sum universe is empty exactly when the box is a single odd-sum point.
    bool universe_empty() const noexcept {
        if (!is_fixed())
            return false;
        sum_t s = 0;
        for (auto x : a_)
            s += x;
        return s % 2 != 0;
    }

    /// Number of integer points in the box, saturating at UINT64_MAX.
    std::uint64_t volume() const noexcept {
        constexpr auto cap = std::numeric_limits<std::uint64_t>::max();
        std::uint64_t v = 1;
        for (std::size_t i = 0; i < a_.size(); ++i) {
            const auto w = static_cast<std::uint64_t>(b_[i] - a_[i]) + 1;
            if (v > cap / w)
                return cap;
            v *= w;
        }
        return v;
    }

    bool contains(std::span<const degree_t> d) const noexcept {
        if (d.size() != a_.size())
            return false;
        for (std::size_t i = 0; i < d.size(); ++i)
            if (d[i] < a_[i] || d[i] > b_[i])
                return false;
        return true;
    }

    friend bool operator==(const IntervalInstance&, const IntervalInstance&) = default;

private:
    std::vector<degree_t> a_;
    std::vector<degree_t> b_;
};

enum class Decision { yes, no, vacuous_yes, not_applicable };

constexpr std::string_view to_string(Decision d) noexcept {
    switch (d) {
    case Decision::yes: return "yes";
    case Decision::no: return "no";
    case Decision::vacuous_yes: return "vacuous-yes";
    case Decision::not_applicable: return "not-applicable";
    }
    return "?";
}

inline std::optional<Decision> decision_from_string(std::string_view s) noexcept {
    for (auto d : {Decision::yes, Decision::no, Decision::vacuous_yes, Decision::not_applicable})
        if (to_string(d) == s)
            return d;
    return std::nullopt;
}

/// Slack (right side minus left side) of one characterization inequality.
struct TermSlack {
    std::size_t t;
    sum_t slack;
    friend bool operator==(const TermSlack&, const TermSlack&) = default;
};

/// Outcome of one of the interval deciders.
/// A `no` always carries the smallest violating t. The witness, when present,
/// is an even-sum member of the box that is not graphic.
struct Verdict {
    Decision decision = Decision::yes;
    std::optional<std::size_t> failing_t;
    std::optional<std::vector<degree_t>> witness;
    bool witness_exhaustive = false; ///< witness came from the exhaustive fallback
    std::vector<TermSlack> slack;    ///< per-t table, filled when explain is requested

    bool accepted() const noexcept { return decision == Decision::yes || decision == Decision::vacuous_yes; }
};

} // namespace degseq
