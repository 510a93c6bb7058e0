#pragma once

// Ground truth by enumeration, plus seeded instance generation for
// differential testing of the interval deciders.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <optional>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "degseq/graphic.hpp"
#include "degseq/interval.hpp"

namespace degseq {

inline constexpr std::uint64_t default_volume_cap = 10'000'000;

/// DEGSEQ_VOLUME_CAP if set to a positive integer, else default_volume_cap.
inline std::uint64_t volume_cap_from_env() {
    if (const char* env = std::getenv("DEGSEQ_VOLUME_CAP")) {
        char* end = nullptr;
        const auto v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0' && v > 0)
            return v;
    }
    return default_volume_cap;
}

class BoxTooLarge : public std::length_error {
public:
    BoxTooLarge(std::uint64_t volume, std::uint64_t cap)
        : std::length_error("box volume " + std::to_string(volume) + " exceeds cap " + std::to_string(cap)) {}
};

/// Visits every integer point of the box once (mixed-radix odometer, first
/// coordinate fastest). The visitor returns false to stop early; the return
/// value tells whether the walk completed.
template <class Visitor>
bool for_each_member(const IntervalInstance& inst, Visitor&& visit) {
    std::vector<degree_t> d(inst.lower().begin(), inst.lower().end());
    const std::size_t n = d.size();
    while (true) {
        if (!visit(std::span<const degree_t>(d)))
            return false;
        std::size_t i = 0;
        while (i < n && d[i] == inst.b(i)) {
            d[i] = inst.a(i);
            ++i;
        }
        if (i == n)
            return true;
        ++d[i];
    }
}

namespace detail {
inline void require_volume(const IntervalInstance& inst, std::uint64_t cap) {
    if (inst.volume() > cap)
        throw BoxTooLarge(inst.volume(), cap);
}
inline bool even(std::span<const degree_t> d) {
    sum_t s = 0;
    for (auto x : d)
        s += x;
    return s % 2 == 0;
}
} // namespace detail

/// Every even-sum member of the box is graphic (true when there are none).
inline bool brute_force_forcible(const IntervalInstance& inst, std::uint64_t cap = default_volume_cap) {
    detail::require_volume(inst, cap);
    return for_each_member(inst, [](std::span<const degree_t> d) { return !detail::even(d) || is_graphic(d); });
}

/// Some even-sum member of the box is graphic.
inline bool brute_force_potential(const IntervalInstance& inst, std::uint64_t cap = default_volume_cap) {
    detail::require_volume(inst, cap);
    return !for_each_member(inst, [](std::span<const degree_t> d) { return !(detail::even(d) && is_graphic(d)); });
}

/// First even-sum non-graphic member in odometer order, if any.
inline std::optional<std::vector<degree_t>> brute_force_counterexample(const IntervalInstance& inst,
                                                                       std::uint64_t cap = default_volume_cap) {
    detail::require_volume(inst, cap);
    std::optional<std::vector<degree_t>> found;
    for_each_member(inst, [&](std::span<const degree_t> d) {
        if (detail::even(d) && !is_graphic(d)) {
            found.emplace(d.begin(), d.end());
            return false;
        }
        return true;
    });
    return found;
}

/// Result of the non-exhaustive mode used when a box exceeds the cap.
struct SampledResult {
    std::uint64_t samples = 0;
    std::optional<std::vector<degree_t>> counterexample;
};

/// Draws coordinates uniformly and tests even-sum draws. A clean result proves nothing.
inline SampledResult sample_forcible(const IntervalInstance& inst, std::uint64_t samples, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    SampledResult r;
    std::vector<degree_t> d(inst.size());
    for (; r.samples < samples; ++r.samples) {
        for (std::size_t i = 0; i < d.size(); ++i)
            d[i] = inst.a(i) + static_cast<degree_t>(rng() % (static_cast<std::uint64_t>(inst.b(i) - inst.a(i)) + 1));
        if (detail::even(d) && !is_graphic(d)) {
            r.counterexample = d;
            ++r.samples;
            break;
        }
    }
    return r;
}

/// Exhaustive search for a simple graph with the given degrees: vertex u
/// picks its neighbors among higher-numbered vertices with residual degree.
/// Exponential; intended for n <= 8.
inline bool realizable_by_search(std::span<const degree_t> d) {
    std::vector<degree_t> residual(d.begin(), d.end());
    const std::size_t n = residual.size();

    std::function<bool(std::size_t)> place = [&](std::size_t u) -> bool {
        if (u == n)
            return true;
        if (residual[u] == 0)
            return place(u + 1);
        std::vector<std::size_t> open;
        for (std::size_t v = u + 1; v < n; ++v)
            if (residual[v] > 0)
                open.push_back(v);
        const auto need = static_cast<std::size_t>(residual[u]);
        if (open.size() < need)
            return false;
        // Walk all need-subsets of open via a selection mask.
        std::vector<bool> pick(open.size(), false);
        std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(need), true);
        const degree_t saved = residual[u];
        do {
            for (std::size_t k = 0; k < open.size(); ++k)
                if (pick[k])
                    --residual[open[k]];
            residual[u] = 0;
            const bool ok = place(u + 1);
            residual[u] = saved;
            for (std::size_t k = 0; k < open.size(); ++k)
                if (pick[k])
                    ++residual[open[k]];
            if (ok)
                return true;
        } while (std::prev_permutation(pick.begin(), pick.end()));
        return false;
    };
    return place(0);
}

/// Weights over the three gap regimes an instance can be drawn from.
struct GapProfile {
    unsigned fixed = 1; ///< a_i = b_i everywhere
    unsigned tight = 1; ///< b_i - a_i in {0, 1}
    unsigned wide = 2;  ///< independent uniform pair per coordinate

    static constexpr GapProfile all_zero() { return {1, 0, 0}; }
};

struct InstanceGenConfig {
    std::size_t n_lo = 1;
    std::size_t n_hi = 5;
    degree_t bound_max = 4;
    GapProfile gap_profile{};
    std::uint64_t seed = 1;

    void validate() const {
        if (n_lo < 1 || n_lo > n_hi)
            throw std::invalid_argument("n range must satisfy 1 <= lo <= hi");
        if (bound_max < 0)
            throw std::invalid_argument("bound_max must be nonnegative");
        if (gap_profile.fixed + gap_profile.tight + gap_profile.wide == 0)
            throw std::invalid_argument("gap profile has no positive weight");
    }
};

/// Deterministic stream of instances; identical output for identical configs.
class InstanceGenerator {
public:
    explicit InstanceGenerator(InstanceGenConfig cfg) : cfg_(cfg), rng_(cfg.seed) { cfg_.validate(); }

    IntervalInstance next() {
        const std::size_t n = cfg_.n_lo + static_cast<std::size_t>(draw(cfg_.n_hi - cfg_.n_lo + 1));
        const auto& g = cfg_.gap_profile;
        const auto pick = draw(std::uint64_t{g.fixed} + g.tight + g.wide);
        const auto top = static_cast<std::uint64_t>(cfg_.bound_max) + 1;

        std::vector<degree_t> a(n), b(n);
        for (std::size_t i = 0; i < n; ++i) {
            if (pick < g.fixed) {
                a[i] = b[i] = static_cast<degree_t>(draw(top));
            } else if (pick < g.fixed + g.tight) {
                b[i] = static_cast<degree_t>(draw(top));
                a[i] = b[i] - static_cast<degree_t>(std::min<std::uint64_t>(draw(2), static_cast<std::uint64_t>(b[i])));
            } else {
                auto x = static_cast<degree_t>(draw(top));
                auto y = static_cast<degree_t>(draw(top));
                a[i] = std::min(x, y);
                b[i] = std::max(x, y);
            }
        }
        return IntervalInstance(std::move(a), std::move(b));
    }

private:
    // Plain modulo keeps the stream identical across standard libraries.
    std::uint64_t draw(std::uint64_t range) { return rng_() % range; }

    InstanceGenConfig cfg_;
    std::mt19937_64 rng_;
};

inline std::vector<IntervalInstance> gen_instances(const InstanceGenConfig& cfg, std::size_t count) {
    InstanceGenerator gen(cfg);
    std::vector<IntervalInstance> out;
    out.reserve(count);
    for (std::size_t k = 0; k < count; ++k)
        out.push_back(gen.next());
    return out;
}

/// Every instance with 1 <= n <= n_max and 0 <= a_i <= b_i <= bound_max.
inline std::vector<IntervalInstance> enumerate_grid(std::size_t n_max, degree_t bound_max) {
    std::vector<std::pair<degree_t, degree_t>> pairs;
    for (degree_t b = 0; b <= bound_max; ++b)
        for (degree_t a = 0; a <= b; ++a)
            pairs.emplace_back(a, b);

    std::vector<IntervalInstance> out;
    for (std::size_t n = 1; n <= n_max; ++n) {
        std::vector<std::size_t> digit(n, 0);
        while (true) {
            std::vector<degree_t> a(n), b(n);
            for (std::size_t i = 0; i < n; ++i)
                std::tie(a[i], b[i]) = pairs[digit[i]];
            out.emplace_back(std::move(a), std::move(b));
            std::size_t i = 0;
            while (i < n && digit[i] + 1 == pairs.size())
                digit[i++] = 0;
            if (i == n)
                break;
            ++digit[i];
        }
    }
    return out;
}

} // namespace degseq
