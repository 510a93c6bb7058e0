#pragma once

// Exact test for "every even-sum sequence in [A, B] is graphic", valid for any
// box. For each t the box is rearranged in good order O(t) and
//
//   sum_{i<=t} b_ti <= t(t-1) + sum_{i>t} min{t, a_ti} + beta(t)
//
// is checked. n sorts of n elements give O(n^2 log n) overall.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "degseq/graphic.hpp"
#include "degseq/interval.hpp"
#include "degseq/oracle.hpp"
#include "degseq/ordering.hpp"

namespace degseq {

/// Everything derived from one view in good order O(t). Positions are 0-based,
/// so I1 is positions [0, t) and rho is the key at position t - 1.
struct BetaContext {
    OrderedView view;
    std::size_t t;
    sum_t rho = 0;
    std::vector<std::size_t> Jstar;
    std::vector<std::size_t> I2; ///< positions >= t with a >= t
    std::vector<std::size_t> I3; ///< positions >= t with a < t
    int beta = 0;
    /// t(t-1) + sum_{i>t} min{t, a_ti} - sum_{i<=t} b_ti, without beta.
    sum_t base_slack = 0;

    sum_t slack() const noexcept { return base_slack + beta; }
};

inline BetaContext beta_context(OrderedView view, bool box_fixed) {
    if (view.kind() != OrderKind::O)
        throw std::invalid_argument("beta is defined on good order O(t)");
    const std::size_t n = view.size();
    const std::size_t t = view.t();
    const auto tt = static_cast<sum_t>(t);

    BetaContext ctx{std::move(view), t, 0, {}, {}, {}, 0, 0};
    const OrderedView& v = ctx.view;
    ctx.rho = v.key(t - 1);

    sum_t mixed = 0;
    sum_t base = tt * (tt - 1);
    bool fixed_on_I2 = true;
    bool I2_meets_Jstar = false;
    bool I1_Jstar_even = true;
    for (std::size_t i = 0; i < n; ++i) {
        const bool in_Jstar = v.key(i) == ctx.rho;
        if (in_Jstar)
            ctx.Jstar.push_back(i);
        if (i < t) {
            mixed += v.b(i);
            base -= v.b(i);
            if (in_Jstar && (sum_t{v.a(i)} + v.b(i)) % 2 != 0)
                I1_Jstar_even = false;
            continue;
        }
        mixed += v.a(i);
        base += std::min<sum_t>(tt, v.a(i));
        if (v.a(i) >= tt) {
            ctx.I2.push_back(i);
            fixed_on_I2 = fixed_on_I2 && v.a(i) == v.b(i);
            I2_meets_Jstar = I2_meets_Jstar || in_Jstar;
        } else {
            ctx.I3.push_back(i);
        }
    }
    ctx.base_slack = base;
    ctx.beta = (!box_fixed && fixed_on_I2 && mixed % 2 != 0 && (!I2_meets_Jstar || I1_Jstar_even)) ? 1 : 0;
    return ctx;
}

inline BetaContext beta_context(const IntervalInstance& inst, std::size_t t) {
    return beta_context(sort_order_Ot(inst, t), inst.is_fixed());
}

class WitnessNotFound : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Witness {
    std::vector<degree_t> sequence; ///< in original coordinate order
    bool exhaustive = false;        ///< produced by the box enumeration fallback
};

namespace detail {

inline bool is_counterexample(const IntervalInstance& inst, const std::vector<degree_t>& d) {
    return inst.contains(d) && even(d) && !is_graphic(d);
}

} // namespace detail

/// A non-graphic even-sum member of the box, built from the extremal sequence
/// at t: b on the first t positions of order O(t), a elsewhere. An odd sum is
/// repaired by moving one coordinate by one step (or, when the t-th key class
/// straddles the cut, lowering a top coordinate to its lower bound). Every
/// candidate is verified; if none works and the box volume is at most
/// volume_cap, the whole box is searched.
inline Witness find_witness(const IntervalInstance& inst, std::size_t t,
                            std::uint64_t volume_cap = default_volume_cap) {
    const BetaContext ctx = beta_context(inst, t);
    const OrderedView& v = ctx.view;
    const std::size_t n = v.size();

    std::vector<degree_t> extremal(n);
    for (std::size_t i = 0; i < n; ++i)
        extremal[v.perm()[i]] = i < t ? v.b(i) : v.a(i);

    auto attempt = [&](std::size_t pos, degree_t value) -> std::optional<std::vector<degree_t>> {
        auto d = extremal;
        d[v.perm()[pos]] = value;
        if (detail::is_counterexample(inst, d))
            return d;
        return std::nullopt;
    };

    if (detail::is_counterexample(inst, extremal))
        return {extremal, false};

    if (!detail::even(extremal)) {
        // Raising an I2 coordinate leaves every min{t, .} term unchanged.
        for (auto i : ctx.I2)
            if (v.a(i) < v.b(i))
                if (auto d = attempt(i, v.a(i) + 1))
                    return {*d, false};
        for (auto i : ctx.I3)
            if (v.a(i) < v.b(i))
                if (auto d = attempt(i, v.a(i) + 1))
                    return {*d, false};
        bool I2_meets_Jstar = false;
        for (auto i : ctx.I2)
            I2_meets_Jstar = I2_meets_Jstar || v.key(i) == ctx.rho;
        if (I2_meets_Jstar)
            for (auto i : ctx.Jstar)
                if (i < t && (sum_t{v.a(i)} + v.b(i)) % 2 != 0)
                    if (auto d = attempt(i, v.a(i)))
                        return {*d, false};
        for (std::size_t i = 0; i < t; ++i)
            if (v.a(i) < v.b(i))
                if (auto d = attempt(i, v.b(i) - 1))
                    return {*d, false};
    }

    if (inst.volume() > volume_cap)
        throw WitnessNotFound("no witness from the construction at t=" + std::to_string(t) +
                              " and the box is too large to search");
    if (auto d = brute_force_counterexample(inst, volume_cap))
        return {*d, true};
    throw WitnessNotFound("every even-sum member of the box is graphic");
}

struct ForcibleOptions {
    bool explain = false; ///< evaluate every t and fill the slack table
    bool witness = false; ///< populate Verdict::witness on a `no`
    std::uint64_t volume_cap = default_volume_cap;
    /// Called with every O(t) view the decider builds.
    std::function<void(const OrderedView&)> on_view;
};

/// Decides whether every even-sum member of the box is graphic.
/// An empty universe (a single odd-sum point) yields vacuous_yes.
inline Verdict check_forcible(const IntervalInstance& inst, const ForcibleOptions& opts = {}) {
    Verdict v;
    if (inst.universe_empty()) {
        v.decision = Decision::vacuous_yes;
        return v;
    }
    const bool fixed = inst.is_fixed();
    for (std::size_t t = 1; t <= inst.size(); ++t) {
        OrderedView view = sort_order_Ot(inst, t);
        if (opts.on_view)
            opts.on_view(view);
        const BetaContext ctx = beta_context(std::move(view), fixed);
        const sum_t slack = ctx.slack();
        if (slack < 0 && !v.failing_t) {
            v.decision = Decision::no;
            v.failing_t = t;
            if (!opts.explain)
                break;
        }
        if (opts.explain)
            v.slack.push_back({t, slack});
    }
    if (v.decision == Decision::no && opts.witness) {
        try {
            auto w = find_witness(inst, *v.failing_t, opts.volume_cap);
            v.witness = std::move(w.sequence);
            v.witness_exhaustive = w.exhaustive;
        } catch (const WitnessNotFound&) {
            // The decision stands; the caller sees no witness.
        }
    }
    return v;
}

} // namespace degseq
