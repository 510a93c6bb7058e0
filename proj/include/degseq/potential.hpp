#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "degseq/interval.hpp"
#include "degseq/ordering.hpp"

namespace degseq {

/// Parity correction for the existence test, evaluated on a view in good order A.
/// J holds 0-based positions i >= t with b_i >= t + 1.
struct AlphaContext {
    std::size_t t = 0;
    std::vector<std::size_t> J;
    int alpha = 0;
};

inline AlphaContext alpha_context(const OrderedView& view, std::size_t t) {
    if (view.kind() != OrderKind::A)
        throw std::invalid_argument("alpha is defined on good order A");
    if (t > view.size())
        throw std::out_of_range("t=" + std::to_string(t) + " outside 0.." + std::to_string(view.size()));
    AlphaContext ctx;
    ctx.t = t;
    bool all_fixed = true;
    sum_t parity = 0;
    for (std::size_t i = t; i < view.size(); ++i) {
        if (static_cast<sum_t>(view.b(i)) < static_cast<sum_t>(t) + 1)
            continue;
        ctx.J.push_back(i);
        all_fixed = all_fixed && view.a(i) == view.b(i);
        parity += view.b(i) + static_cast<sum_t>(t);
    }
    ctx.alpha = (all_fixed && parity % 2 != 0) ? 1 : 0;
    return ctx;
}

inline int alpha(const IntervalInstance& inst, std::size_t t) { return alpha_context(sort_order_A(inst), t).alpha; }

namespace detail {

// Prefix sums over a value domain [0, size).
class Fenwick {
public:
    explicit Fenwick(std::size_t size) : tree_(size + 1, 0) {}
    void add(std::size_t pos, sum_t delta) {
        for (++pos; pos < tree_.size(); pos += pos & (~pos + 1))
            tree_[pos] += delta;
    }
    // Sum over [0, pos).
    sum_t prefix(std::size_t pos) const {
        sum_t s = 0;
        for (; pos > 0; pos -= pos & (~pos + 1))
            s += tree_[pos];
        return s;
    }
    sum_t total() const { return prefix(tree_.size() - 1); }

private:
    std::vector<sum_t> tree_;
};

} // namespace detail

struct PotentialOptions {
    bool explain = false;
};

/// Is some even-sum member of the box graphic? Evaluates, in good order A,
///   sum_{i<=t} a_i <= t(t-1) + sum_{i>t} min{t, b_i} - alpha(t)   for t = 0..n
/// in O(n log n). A `no` reports the smallest violating t.
inline Verdict check_potential(const IntervalInstance& inst, const PotentialOptions& opts = {}) {
    const OrderedView view = sort_order_A(inst);
    const std::size_t n = view.size();

    // Suffix aggregates over positions >= t keyed by b clamped to n + 1,
    // so "b >= t + 1" is a range query for every t <= n.
    detail::Fenwick count(n + 2), bsum(n + 2), loose(n + 2);
    std::vector<sum_t> prefix_a(n + 1, 0);
    for (std::size_t i = 0; i < n; ++i)
        prefix_a[i + 1] = prefix_a[i] + view.a(i);

    std::vector<sum_t> slack(n + 1);
    sum_t suffix_b = 0;
    for (std::size_t t = n + 1; t-- > 0;) {
        if (t < n) {
            const std::size_t i = t;
            const auto key = std::min<std::size_t>(static_cast<std::size_t>(view.b(i)), n + 1);
            count.add(key, 1);
            bsum.add(key, view.b(i));
            loose.add(key, view.a(i) < view.b(i) ? 1 : 0);
            suffix_b += view.b(i);
        }
        const auto tt = static_cast<sum_t>(t);
        const sum_t c = count.total() - count.prefix(t + 1);
        const sum_t s = bsum.total() - bsum.prefix(t + 1);
        const sum_t u = loose.total() - loose.prefix(t + 1);
        const int alpha_t = (u == 0 && (s + tt * c) % 2 != 0) ? 1 : 0;
        const sum_t rhs = tt * (tt - 1) + (suffix_b - s + tt * c) - alpha_t;
        slack[t] = rhs - prefix_a[t];
    }

    Verdict v;
    for (std::size_t t = 0; t <= n; ++t) {
        if (slack[t] < 0 && !v.failing_t) {
            v.decision = Decision::no;
            v.failing_t = t;
        }
        if (opts.explain)
            v.slack.push_back({t, slack[t]});
    }
    return v;
}

} // namespace degseq
