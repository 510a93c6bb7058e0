#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "degseq/interval.hpp"

namespace degseq {

enum class OrderKind { A, B, O };

/// A rearrangement of an IntervalInstance. Position i (0-based) holds
/// coordinate perm()[i] of the original instance.
class OrderedView {
public:
    OrderedView(const IntervalInstance& inst, std::vector<std::size_t> perm, OrderKind kind, std::size_t t = 0)
        : perm_(std::move(perm)), kind_(kind), t_(t) {
        a_.reserve(perm_.size());
        b_.reserve(perm_.size());
        for (auto p : perm_) {
            a_.push_back(inst.a(p));
            b_.push_back(inst.b(p));
        }
    }

    std::size_t size() const noexcept { return perm_.size(); }
    OrderKind kind() const noexcept { return kind_; }
    /// Parameter of order O(t); 0 for the other kinds.
    std::size_t t() const noexcept { return t_; }
    const std::vector<std::size_t>& perm() const noexcept { return perm_; }
    degree_t a(std::size_t i) const { return a_[i]; }
    degree_t b(std::size_t i) const { return b_[i]; }
    std::span<const degree_t> lower() const noexcept { return a_; }
    std::span<const degree_t> upper() const noexcept { return b_; }

    /// b_i + min{t, a_i}, the primary key of order O(t).
    sum_t key(std::size_t i) const {
        return static_cast<sum_t>(b_[i]) + std::min<sum_t>(static_cast<sum_t>(t_), a_[i]);
    }

private:
    std::vector<std::size_t> perm_;
    OrderKind kind_;
    std::size_t t_;
    std::vector<degree_t> a_;
    std::vector<degree_t> b_;
};

/// Good order A: a non-increasing, ties by b non-increasing (then index).
inline OrderedView sort_order_A(const IntervalInstance& inst) {
    std::vector<std::size_t> perm(inst.size());
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    std::sort(perm.begin(), perm.end(), [&](std::size_t x, std::size_t y) {
        if (inst.a(x) != inst.a(y))
            return inst.a(x) > inst.a(y);
        if (inst.b(x) != inst.b(y))
            return inst.b(x) > inst.b(y);
        return x < y;
    });
    return OrderedView(inst, std::move(perm), OrderKind::A);
}

inline bool is_good_order_A(const OrderedView& v) {
    for (std::size_t i = 0; i + 1 < v.size(); ++i)
        if (!(v.a(i) > v.a(i + 1) || (v.a(i) == v.a(i + 1) && v.b(i) >= v.b(i + 1))))
            return false;
    return true;
}

inline bool is_good_order_B(const OrderedView& v) {
    for (std::size_t i = 0; i + 1 < v.size(); ++i) {
        if (v.a(i) < v.a(i + 1))
            return false;
        if (sum_t{v.a(i)} + v.b(i) < sum_t{v.a(i + 1)} + v.b(i + 1))
            return false;
    }
    return true;
}

/// Good order B if one exists. The canonical sort (a desc, a+b desc, index)
/// is the only candidate up to ties that cannot matter, so a failed check
/// means no permutation works.
inline std::optional<OrderedView> sort_order_B(const IntervalInstance& inst) {
    std::vector<std::size_t> perm(inst.size());
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    std::sort(perm.begin(), perm.end(), [&](std::size_t x, std::size_t y) {
        if (inst.a(x) != inst.a(y))
            return inst.a(x) > inst.a(y);
        const sum_t sx = sum_t{inst.a(x)} + inst.b(x);
        const sum_t sy = sum_t{inst.a(y)} + inst.b(y);
        if (sx != sy)
            return sx > sy;
        return x < y;
    });
    OrderedView view(inst, std::move(perm), OrderKind::B);
    if (!is_good_order_B(view))
        return std::nullopt;
    return view;
}

/// Good order O(t), 1 <= t <= n: by b + min{t,a} desc, then b desc, then a + b
/// desc, then original index asc.
inline OrderedView sort_order_Ot(const IntervalInstance& inst, std::size_t t) {
    const std::size_t n = inst.size();
    if (t < 1 || t > n)
        throw std::out_of_range("t=" + std::to_string(t) + " outside 1.." + std::to_string(n));

    struct Key {
        sum_t primary;
        degree_t b;
        sum_t ab;
        std::size_t index;
    };
    const auto tt = static_cast<sum_t>(t);
    std::vector<Key> keys(n);
    for (std::size_t i = 0; i < n; ++i) {
        const sum_t a = inst.a(i), b = inst.b(i);
        keys[i] = {b + std::min(tt, a), inst.b(i), a + b, i};
    }
    std::sort(keys.begin(), keys.end(), [](const Key& x, const Key& y) {
        if (x.primary != y.primary)
            return x.primary > y.primary;
        if (x.b != y.b)
            return x.b > y.b;
        if (x.ab != y.ab)
            return x.ab > y.ab;
        return x.index < y.index;
    });
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i)
        perm[i] = keys[i].index;
    return OrderedView(inst, std::move(perm), OrderKind::O, t);
}

/// The three-tier adjacency condition of good order O(t).
inline bool is_good_order_Ot(const OrderedView& v) {
    for (std::size_t i = 0; i + 1 < v.size(); ++i) {
        const sum_t k0 = v.key(i), k1 = v.key(i + 1);
        if (k0 > k1)
            continue;
        if (k0 < k1)
            return false;
        if (v.b(i) > v.b(i + 1))
            continue;
        if (v.b(i) < v.b(i + 1))
            return false;
        if (sum_t{v.a(i)} + v.b(i) < sum_t{v.a(i + 1)} + v.b(i + 1))
            return false;
    }
    return true;
}

/// Pairwise consequence of order O(t) used by the witness construction:
/// b_i >= min{a_j + 1, b_j} >= a_j for i < j, and b_i >= a_j whenever both
/// positions share the key of position t. O(n^2).
inline bool satisfies_sort_invariant(const OrderedView& v) {
    const std::size_t n = v.size();
    for (std::size_t j = 0; j < n; ++j) {
        const degree_t floor_j = std::min<sum_t>(sum_t{v.a(j)} + 1, v.b(j));
        if (floor_j < v.a(j))
            return false;
        for (std::size_t i = 0; i < j; ++i)
            if (v.b(i) < floor_j)
                return false;
    }
    if (v.kind() == OrderKind::O && v.t() >= 1 && v.t() <= n) {
        const sum_t rho = v.key(v.t() - 1);
        for (std::size_t i = 0; i < n; ++i) {
            if (v.key(i) != rho)
                continue;
            for (std::size_t j = 0; j < n; ++j)
                if (v.key(j) == rho && v.b(i) < v.a(j))
                    return false;
        }
    }
    return true;
}

} // namespace degseq
