#pragma once

// Timing harness for the forcible decider.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "degseq/forcible.hpp"

namespace degseq {

/// Random box whose bounds all lie in [n/8, n/4]. Every even-sum member of
/// such a box is graphic once n is moderately large, so the decider has to
/// scan every t instead of stopping at an early violation.
inline IntervalInstance bench_instance(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const auto lo = static_cast<std::uint64_t>(n / 8);
    const auto span = static_cast<std::uint64_t>(n / 4) - lo + 1;
    std::vector<degree_t> a(n), b(n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto x = static_cast<degree_t>(lo + rng() % span);
        const auto y = static_cast<degree_t>(lo + rng() % span);
        a[i] = std::min(x, y);
        b[i] = std::max(x, y);
    }
    return IntervalInstance(std::move(a), std::move(b));
}

struct BenchRow {
    std::size_t n = 0;
    std::size_t trials = 0;
    double median_ms = 0;
    double min_ms = 0;
    double max_ms = 0;
    Decision decision = Decision::yes;
};

inline BenchRow bench_forcible(std::size_t n, std::size_t trials, std::uint64_t seed) {
    BenchRow row;
    row.n = n;
    row.trials = trials;
    std::vector<double> ms;
    for (std::size_t k = 0; k < trials; ++k) {
        const auto inst = bench_instance(n, seed + k);
        const auto start = std::chrono::steady_clock::now();
        const auto v = check_forcible(inst);
        const auto stop = std::chrono::steady_clock::now();
        ms.push_back(std::chrono::duration<double, std::milli>(stop - start).count());
        if (!v.accepted())
            row.decision = v.decision;
    }
    if (ms.empty())
        return row;
    std::sort(ms.begin(), ms.end());
    row.median_ms = ms[ms.size() / 2];
    row.min_ms = ms.front();
    row.max_ms = ms.back();
    return row;
}

/// Least-squares slope of log(time) against log(n).
inline std::optional<double> fit_exponent(const std::vector<BenchRow>& rows) {
    std::vector<std::pair<double, double>> pts;
    for (const auto& r : rows)
        if (r.n > 0 && r.median_ms > 0)
            pts.emplace_back(std::log(static_cast<double>(r.n)), std::log(r.median_ms));
    if (pts.size() < 2)
        return std::nullopt;
    double mx = 0, my = 0;
    for (auto [x, y] : pts) {
        mx += x;
        my += y;
    }
    mx /= static_cast<double>(pts.size());
    my /= static_cast<double>(pts.size());
    double sxy = 0, sxx = 0;
    for (auto [x, y] : pts) {
        sxy += (x - mx) * (y - my);
        sxx += (x - mx) * (x - mx);
    }
    if (sxx == 0)
        return std::nullopt;
    return sxy / sxx;
}

} // namespace degseq
