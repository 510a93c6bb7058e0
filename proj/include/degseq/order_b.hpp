#pragma once

// Deciders that require the box to be arranged in good order B: the
// necessary and the sufficient condition with correction xi(t), and the exact
// forcible test with correction beta'(t). All of them are O(n^2).

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "degseq/interval.hpp"
#include "degseq/ordering.hpp"

namespace degseq {

/// Per-t quantities on a view in good order B. Positions are 0-based;
/// J = {i >= t : b_i >= t+1}, Jprime = {i >= t : a_i >= t}.
struct OrderBContext {
    std::size_t t = 0;
    std::vector<std::size_t> J;
    int xi = 0;
    std::vector<std::size_t> Jprime;
    int beta_prime = 0;
};

inline OrderBContext order_b_context(const OrderedView& view, std::size_t t) {
    if (view.kind() != OrderKind::B)
        throw std::invalid_argument("xi and beta' are defined on good order B");
    const std::size_t n = view.size();
    if (t > n)
        throw std::out_of_range("t=" + std::to_string(t) + " outside 0.." + std::to_string(n));
    const auto tt = static_cast<sum_t>(t);

    OrderBContext ctx;
    ctx.t = t;
    bool loose_in_J = false;
    sum_t j_parity = 0;
    bool fixed_on_Jprime = true;
    bool box_fixed = true;
    sum_t mixed = 0;
    for (std::size_t i = 0; i < n; ++i) {
        box_fixed = box_fixed && view.a(i) == view.b(i);
        mixed += i < t ? view.b(i) : view.a(i);
        if (i < t)
            continue;
        if (view.b(i) >= tt + 1) {
            ctx.J.push_back(i);
            loose_in_J = loose_in_J || view.a(i) < view.b(i);
            j_parity += view.b(i) + tt;
        }
        if (view.a(i) >= tt) {
            ctx.Jprime.push_back(i);
            fixed_on_Jprime = fixed_on_Jprime && view.a(i) == view.b(i);
        }
    }
    ctx.xi = (loose_in_J || j_parity % 2 != 0) ? 1 : 0;
    ctx.beta_prime = (!box_fixed && fixed_on_Jprime && mixed % 2 != 0) ? 1 : 0;
    return ctx;
}

namespace detail {

// t(t-1) + sum_{i>t} min{t, a_i} - sum_{i<=t} b_i on a positional view.
inline sum_t forcible_base_slack(const OrderedView& view, std::size_t t) {
    const auto tt = static_cast<sum_t>(t);
    sum_t s = tt * (tt - 1);
    for (std::size_t i = 0; i < view.size(); ++i)
        s += i < t ? -sum_t{view.b(i)} : std::min<sum_t>(tt, view.a(i));
    return s;
}

enum class GyBound { necessary, sufficient };

inline Verdict check_gy(const IntervalInstance& inst, GyBound which, bool explain) {
    Verdict v;
    auto view = sort_order_B(inst);
    if (!view) {
        v.decision = Decision::not_applicable;
        return v;
    }
    if (inst.universe_empty()) {
        v.decision = Decision::vacuous_yes;
        return v;
    }
    const sum_t allowance = inst.is_fixed() ? 0 : (which == GyBound::necessary ? 2 : 1);
    for (std::size_t t = 0; t <= view->size(); ++t) {
        const sum_t slack = forcible_base_slack(*view, t) - order_b_context(*view, t).xi + allowance;
        if (slack < 0 && !v.failing_t) {
            v.decision = Decision::no;
            v.failing_t = t;
            if (!explain)
                break;
        }
        if (explain)
            v.slack.push_back({t, slack});
    }
    return v;
}

} // namespace detail

/// Necessary condition for every member to be graphic (t = 0..n).
/// not_applicable when good order B does not exist.
inline Verdict check_gy_necessary(const IntervalInstance& inst, bool explain = false) {
    return detail::check_gy(inst, detail::GyBound::necessary, explain);
}

/// Sufficient condition for every member to be graphic (t = 0..n).
inline Verdict check_gy_sufficient(const IntervalInstance& inst, bool explain = false) {
    return detail::check_gy(inst, detail::GyBound::sufficient, explain);
}

/// Exact forcible test for boxes in good order B:
///   sum_{i<=t} b_i <= t(t-1) + sum_{i>t} min{t, a_i} + beta'(t),  t = 1..n.
inline Verdict check_forcible_orderB(const IntervalInstance& inst, bool explain = false) {
    Verdict v;
    auto view = sort_order_B(inst);
    if (!view) {
        v.decision = Decision::not_applicable;
        return v;
    }
    if (inst.universe_empty()) {
        v.decision = Decision::vacuous_yes;
        return v;
    }
    for (std::size_t t = 1; t <= view->size(); ++t) {
        const sum_t slack = detail::forcible_base_slack(*view, t) + order_b_context(*view, t).beta_prime;
        if (slack < 0 && !v.failing_t) {
            v.decision = Decision::no;
            v.failing_t = t;
            if (!explain)
                break;
        }
        if (explain)
            v.slack.push_back({t, slack});
    }
    return v;
}

} // namespace degseq
